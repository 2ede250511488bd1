"""Embedded-sphere primitives: unit vectors, triangles, frames, geodesics.

Points on the unit sphere are plain numpy arrays of shape (3,) with unit
norm; no coordinate chart is ever used.  All functions are pure and never
mutate their arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AntipodalVertices, NonPositiveOrientation, ZeroVector

__all__ = [
    "UNIT_NORM_TOL",
    "DEGENERATE_DET_TOL",
    "ANTIPODAL_DOT_TOL",
    "EX",
    "EY",
    "EZ",
    "SphericalTriangle",
    "TangentBasis",
    "normalize",
    "det3",
    "make_triangle",
    "side_lengths",
    "midpoints",
    "tangent_basis",
    "geodesic_point",
]

UNIT_NORM_TOL = 1e-12
DEGENERATE_DET_TOL = 1e-14
ANTIPODAL_DOT_TOL = 1e-9

EX = np.array([1.0, 0.0, 0.0])
EY = np.array([0.0, 1.0, 0.0])
EZ = np.array([0.0, 0.0, 1.0])


def normalize(v) -> np.ndarray:
    """Unit vector in the direction of ``v``; raises ZeroVector below 1e-14."""
    v = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(v))
    if n <= 1e-14:
        raise ZeroVector(f"cannot normalize near-zero vector (|v| = {n:.3e})")
    return v / n


def det3(u, v, w) -> float:
    """Determinant of the 3x3 matrix with columns ``u``, ``v``, ``w``."""
    return float(
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def _check_unit(v: np.ndarray, name: str) -> None:
    if abs(float(v @ v) - 1.0) > 2.0 * UNIT_NORM_TOL:
        raise ValueError(f"{name} is not unit-norm (|v|^2 = {float(v @ v)!r})")


@dataclass(frozen=True, eq=False)
class SphericalTriangle:
    """Positively oriented vertex triple with cached pairwise dot products.

    ``cBC`` is cos a, ``cCA`` is cos b, ``cAB`` is cos c (sides opposite
    A, B, C respectively).  Built via :func:`make_triangle`.
    """

    vA: np.ndarray
    vB: np.ndarray
    vC: np.ndarray
    cAB: float
    cBC: float
    cCA: float
    detM: float

    @property
    def vertices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.vA, self.vB, self.vC

    def rotated(self) -> "SphericalTriangle":
        """Cyclically relabeled triangle (B, C, A)."""
        return make_triangle(self.vB, self.vC, self.vA)


@dataclass(frozen=True, eq=False)
class TangentBasis:
    """Oriented orthonormal pair spanning the tangent plane at ``base``."""

    base: np.ndarray
    e1: np.ndarray
    e2: np.ndarray


def make_triangle(a, b, c) -> SphericalTriangle:
    """Validate a vertex triple and cache its dot products and determinant.

    Antipodal vertex pairs are rejected before the orientation test so the
    error names the actual defect.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    for name, v in (("vertex A", a), ("vertex B", b), ("vertex C", c)):
        _check_unit(v, name)

    cab = float(a @ b)
    cbc = float(b @ c)
    cca = float(c @ a)
    for pair, dot in (("A,B", cab), ("B,C", cbc), ("C,A", cca)):
        if dot <= -1.0 + ANTIPODAL_DOT_TOL:
            raise AntipodalVertices(f"vertices {pair} are antipodal (dot = {dot!r})")

    det = det3(a, b, c)
    if det <= DEGENERATE_DET_TOL:
        raise NonPositiveOrientation(
            f"vertex triple is not positively oriented (det = {det!r})"
        )
    return SphericalTriangle(a.copy(), b.copy(), c.copy(), cab, cbc, cca, det)


def _clamped_arccos(x: float) -> float:
    return math.acos(min(1.0, max(-1.0, x)))


def side_lengths(t: SphericalTriangle) -> tuple[float, float, float]:
    """Geodesic side lengths (a, b, c) opposite vertices A, B, C, in radians."""
    return (
        _clamped_arccos(t.cBC),
        _clamped_arccos(t.cCA),
        _clamped_arccos(t.cAB),
    )


def midpoints(t: SphericalTriangle) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Geodesic midpoints (D, E, F) of sides AB, BC, CA.

    The normalizer sqrt(2(1 + A.B)) is evaluated as the norm of the summed
    components, which keeps D exactly unit even for long edges where the
    cached dot has lost relative precision.
    """
    return normalize(t.vA + t.vB), normalize(t.vB + t.vC), normalize(t.vC + t.vA)


def tangent_basis(x) -> TangentBasis:
    """Deterministic right-handed orthonormal frame of the tangent plane at x.

    Seed axis is e_z, switched to e_x when x is within ~25 degrees of the
    poles, so the construction never degenerates.
    """
    x = np.asarray(x, dtype=float)
    _check_unit(x, "base point")
    k = EZ if abs(float(x @ EZ)) <= 0.9 else EX
    e1 = normalize(np.cross(k, x))
    e2 = np.cross(x, e1)
    return TangentBasis(x.copy(), e1, e2)


def geodesic_point(p, q, s: float) -> np.ndarray:
    """Point at arc-length fraction ``s`` along the great circle from p to q."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    dot = float(p @ q)
    if dot <= -1.0 + ANTIPODAL_DOT_TOL:
        raise AntipodalVertices(f"geodesic endpoints are antipodal (dot = {dot!r})")
    theta = _clamped_arccos(dot)
    if theta < 1e-12:
        return p.copy()
    return (math.sin((1.0 - s) * theta) * p + math.sin(s * theta) * q) / math.sin(theta)
