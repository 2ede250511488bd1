"""Sub-triangle areas and barycentric coordinates of a point in a triangle.

A point X inside triangle ABC splits it into the positively oriented
sub-triangles BCX, CAX, ABX whose areas S_A, S_B, S_C sum to the total.
The barycentric coordinates are the area ratios lambda_i = S_i / S; they
are the scalar (0-form) interpolants attached to the vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .area import AreaMethod, area
from .errors import AntipodalPoint, OutsideTriangle
from .geom import SphericalTriangle, _check_unit, det3

__all__ = [
    "VertexLabel",
    "EdgeLabel",
    "SubAreas",
    "Barycentric",
    "f_factor",
    "sub_areas",
    "barycentric",
]

EDGE_DEGENERATE_TOL = 1e-12


class VertexLabel(Enum):
    A = "A"
    B = "B"
    C = "C"

    @property
    def successor(self) -> "VertexLabel":
        return _SUCCESSOR[self]

    @property
    def opposite_edge(self) -> "EdgeLabel":
        return _OPPOSITE[self]


class EdgeLabel(Enum):
    AB = "AB"
    BC = "BC"
    CA = "CA"

    @property
    def endpoints(self) -> tuple[VertexLabel, VertexLabel]:
        return _ENDPOINTS[self]


_SUCCESSOR = {VertexLabel.A: VertexLabel.B, VertexLabel.B: VertexLabel.C, VertexLabel.C: VertexLabel.A}
_OPPOSITE = {VertexLabel.A: EdgeLabel.BC, VertexLabel.B: EdgeLabel.CA, VertexLabel.C: EdgeLabel.AB}
_ENDPOINTS = {
    EdgeLabel.AB: (VertexLabel.A, VertexLabel.B),
    EdgeLabel.BC: (VertexLabel.B, VertexLabel.C),
    EdgeLabel.CA: (VertexLabel.C, VertexLabel.A),
}


def vertex_of(t: SphericalTriangle, v: VertexLabel) -> np.ndarray:
    return {VertexLabel.A: t.vA, VertexLabel.B: t.vB, VertexLabel.C: t.vC}[v]


def _opposite_pair(t: SphericalTriangle, v: VertexLabel) -> tuple[np.ndarray, np.ndarray]:
    """Ordered endpoints (P, Q) of the edge opposite v, keeping column order
    M(B,C,X), M(C,A,X), M(A,B,X) for v = A, B, C."""
    if v is VertexLabel.A:
        return t.vB, t.vC
    if v is VertexLabel.B:
        return t.vC, t.vA
    return t.vA, t.vB


def f_factor(t: SphericalTriangle, x, v: VertexLabel) -> float:
    """The positive normalizer 2(1 + P.Q)(1 + P.X)(1 + Q.X) for vertex v.

    P, Q are the endpoints of the edge opposite v.  Raises AntipodalPoint
    as soon as any factor falls inside the antipodal guard.
    """
    p, q = _opposite_pair(t, v)
    factors = (1.0 + float(p @ q), 1.0 + float(p @ x), 1.0 + float(q @ x))
    for fac in factors:
        if fac <= 1e-9:
            raise AntipodalPoint(
                f"point is antipodal to an endpoint of the edge opposite {v.value}"
            )
    return 2.0 * factors[0] * factors[1] * factors[2]


def _sub_area(t: SphericalTriangle, x, v: VertexLabel) -> float:
    """Area of the sub-triangle opposite v via the atan2 of the concise
    sine/cosine half-area forms; exactly zero on the degenerate locus."""
    p, q = _opposite_pair(t, v)
    det = det3(p, q, x)
    if abs(det) <= EDGE_DEGENERATE_TOL:
        return 0.0
    root_f = math.sqrt(f_factor(t, x, v))
    cos_half = (1.0 + float(p @ q) + float((p + q) @ x)) / root_f
    sin_half = det / root_f
    return 2.0 * math.atan2(sin_half, cos_half)


@dataclass(frozen=True)
class SubAreas:
    """Areas of BCX, CAX, ABX plus the undivided total."""

    sA: float
    sB: float
    sC: float
    total: float


@dataclass(frozen=True)
class Barycentric:
    lA: float
    lB: float
    lC: float

    def as_tuple(self) -> tuple[float, float, float]:
        return self.lA, self.lB, self.lC


def sub_areas(t: SphericalTriangle, x) -> SubAreas:
    """Partition the triangle area at x (inside or on the boundary)."""
    x = np.asarray(x, dtype=float)
    _check_unit(x, "point")
    dets = {v: det3(*_opposite_pair(t, v), x) for v in VertexLabel}
    for v, det in dets.items():
        if det < -EDGE_DEGENERATE_TOL:
            raise OutsideTriangle(
                f"point lies outside the triangle (det for vertex {v.value} = {det!r})"
            )
    # antipodal guard against every vertex, not only the two of one edge
    for v in VertexLabel:
        if 1.0 + float(vertex_of(t, v) @ x) <= 1e-9:
            raise AntipodalPoint(f"point is antipodal to vertex {v.value}")
    return SubAreas(
        sA=_sub_area(t, x, VertexLabel.A),
        sB=_sub_area(t, x, VertexLabel.B),
        sC=_sub_area(t, x, VertexLabel.C),
        total=area(t, AreaMethod.TUYNMAN),
    )


def barycentric(t: SphericalTriangle, x) -> Barycentric:
    """Area-ratio coordinates of x; a partition of unity over the triangle."""
    s = sub_areas(t, x)
    return Barycentric(s.sA / s.total, s.sB / s.total, s.sC / s.total)
