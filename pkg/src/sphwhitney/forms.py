"""Differential machinery: area differentials, Whitney 1/2-forms, omega.

Covectors are stored as raw ambient coefficient vectors exactly as the
defining formulas produce them; the projection to the tangent plane happens
at application time, so apply() is well defined for any ambient vector while
agreeing with the plain dot product on tangent vectors.

The scalar density ``omega`` relates the Whitney 2-form of a triangle to the
area 2-form of the sphere.  It is a rational function of the Cartesian
coordinates of the evaluation point, defined on the whole sphere except for
poles at the three vertex antipodes and a guarded 0/0 locus on the great
circles through vertex pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .area import AreaMethod, area
from .barycentric import EdgeLabel, VertexLabel, _opposite_pair, barycentric, vertex_of
from .errors import AntipodalPoint, DegenerateSubTriangle, PoleProximity, SubDeterminantZero
from .geom import SphericalTriangle, TangentBasis, _check_unit, det3, normalize

__all__ = [
    "Covector",
    "TwoForm",
    "f_vector",
    "d_sub_area",
    "d_lambda",
    "whitney1",
    "whitney1_oriented",
    "whitney2",
    "omega",
]

SUB_DET_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Covector:
    """Linear functional on tangent vectors at ``base``, V -> coeff . V."""

    base: np.ndarray
    coeff: np.ndarray

    def apply(self, v) -> float:
        v = np.asarray(v, dtype=float)
        vt = v - float(v @ self.base) * self.base
        return float(self.coeff @ vt)

    def tangent_components(self, basis: TangentBasis) -> tuple[float, float]:
        return float(self.coeff @ basis.e1), float(self.coeff @ basis.e2)


@dataclass(frozen=True, eq=False)
class TwoForm:
    """coeff * (u . dX) wedge (v . dX) evaluated on ordered tangent pairs."""

    base: np.ndarray
    coeff: float
    u: np.ndarray
    v: np.ndarray

    def apply(self, v1, v2) -> float:
        v1 = np.asarray(v1, dtype=float)
        v2 = np.asarray(v2, dtype=float)
        p1 = v1 - float(v1 @ self.base) * self.base
        p2 = v2 - float(v2 @ self.base) * self.base
        return self.coeff * (
            float(self.u @ p1) * float(self.v @ p2)
            - float(self.u @ p2) * float(self.v @ p1)
        )


def _bracket(p: np.ndarray, q: np.ndarray, x: np.ndarray) -> float:
    """Coefficient of p in the edge vector field: 1 - q.(x+p)/(1+p.x)."""
    denom = 1.0 + float(p @ x)
    if denom <= 1e-9:
        raise AntipodalPoint("point is antipodal to an edge endpoint")
    return 1.0 - float(q @ (x + p)) / denom


def f_vector(t: SphericalTriangle, x, e: EdgeLabel) -> np.ndarray:
    """Ambient vector field of edge e whose dot with dX drives the area
    differentials; symmetric in the two edge endpoints."""
    x = np.asarray(x, dtype=float)
    i, j = e.endpoints
    p = vertex_of(t, i)
    q = vertex_of(t, j)
    return _bracket(p, q, x) * p + _bracket(q, p, x) * q


def _vertex_det(t: SphericalTriangle, x: np.ndarray, v: VertexLabel) -> float:
    p, q = _opposite_pair(t, v)
    return det3(p, q, x)


def d_sub_area(t: SphericalTriangle, x, v: VertexLabel) -> Covector:
    """Differential of the sub-area attached to vertex v, as a covector at x."""
    x = np.asarray(x, dtype=float)
    det = _vertex_det(t, x, v)
    if abs(det) < SUB_DET_TOL:
        raise DegenerateSubTriangle(
            f"sub-triangle for vertex {v.value} is degenerate at this point"
        )
    f = f_vector(t, x, v.opposite_edge)
    return Covector(x.copy(), -f / det)


def d_lambda(t: SphericalTriangle, x, v: VertexLabel) -> Covector:
    """Differential of the barycentric coordinate lambda_v."""
    d = d_sub_area(t, x, v)
    s = area(t, AreaMethod.TUYNMAN)
    return Covector(d.base, d.coeff / s)


# Distance-to-great-circle (radians-ish) below which the raw F/det ratio is
# evaluated by transversal displacement instead; the ratio is 0/0 on the
# circle with a finite tangential limit, and the displaced central average
# balances O(delta^2) truncation against O(eps/delta) cancellation noise.
_STABLE_DIST_TOL = 1e-6
_STABLE_DELTA = 5e-6


def _ratio_vector(t: SphericalTriangle, x: np.ndarray, v: VertexLabel) -> np.ndarray:
    """Representative of F_e/det_v at x (e the edge opposite v), such that its
    dot with a tangent-projected vector is d(S_v) up to sign.

    Away from the great circle through the opposite edge this is the raw
    ratio, bit-identical to the published formula.  On and near the circle
    the raw ratio is indeterminate; there the tangential part, which extends
    smoothly across the circle, is evaluated at two transversally displaced
    points and averaged.
    """
    p, q = _opposite_pair(t, v)
    det = det3(p, q, x)
    n = np.cross(p, q)
    n_norm = float(np.linalg.norm(n))
    if abs(det) >= _STABLE_DIST_TOL * n_norm:
        return f_vector(t, x, v.opposite_edge) / det

    n_t = normalize(n - float(n @ x) * x)

    def tangential_ratio(y: np.ndarray) -> np.ndarray:
        f = f_vector(t, y, v.opposite_edge)
        ft = f - float(f @ y) * y
        return ft / det3(p, q, y)

    y_plus = normalize(x + _STABLE_DELTA * n_t)
    y_minus = normalize(x - _STABLE_DELTA * n_t)
    return 0.5 * (tangential_ratio(y_plus) + tangential_ratio(y_minus))


def whitney1_oriented(t: SphericalTriangle, x, i: VertexLabel, j: VertexLabel) -> Covector:
    """Edge 1-form lambda_i d(lambda_j) - lambda_j d(lambda_i) in the
    explicitly antisymmetric combined form.

    Well defined on the closed triangle minus the vertices; on the far
    edges (where one sub-determinant vanishes) the indeterminate ratio is
    resolved by its finite tangential limit.
    """
    x = np.asarray(x, dtype=float)
    lam = barycentric(t, x)
    lam_by = {VertexLabel.A: lam.lA, VertexLabel.B: lam.lB, VertexLabel.C: lam.lC}
    s = area(t, AreaMethod.TUYNMAN)
    coeff = (lam_by[j] * _ratio_vector(t, x, i) - lam_by[i] * _ratio_vector(t, x, j)) / s
    return Covector(x.copy(), coeff)


def whitney1(t: SphericalTriangle, x, e: EdgeLabel) -> Covector:
    """Whitney 1-form of edge e with its canonical orientation."""
    i, j = e.endpoints
    return whitney1_oriented(t, x, i, j)


def whitney2(t: SphericalTriangle, x) -> TwoForm:
    """Whitney 2-form 2 d(lambda_A) wedge d(lambda_B) at x."""
    x = np.asarray(x, dtype=float)
    det_a = _vertex_det(t, x, VertexLabel.A)
    det_b = _vertex_det(t, x, VertexLabel.B)
    if abs(det_a) < SUB_DET_TOL or abs(det_b) < SUB_DET_TOL:
        raise DegenerateSubTriangle("a sub-determinant vanishes at this point")
    s = area(t, AreaMethod.TUYNMAN)
    u = f_vector(t, x, EdgeLabel.BC)
    v = f_vector(t, x, EdgeLabel.CA)
    return TwoForm(x.copy(), 2.0 / (s * s * det_a * det_b), u, v)


def omega(t: SphericalTriangle, x) -> float:
    """Scalar density of the Whitney 2-form against the sphere's area form.

    Defined on the whole sphere minus guard bands; x need not lie inside
    the triangle.
    """
    x = np.asarray(x, dtype=float)
    _check_unit(x, "point")
    for v in VertexLabel:
        if abs(1.0 + float(vertex_of(t, v) @ x)) < 1e-9:
            raise PoleProximity(f"point is inside the pole guard band of -{v.value}")
    det_a = _vertex_det(t, x, VertexLabel.A)
    det_b = _vertex_det(t, x, VertexLabel.B)
    if abs(det_a) < SUB_DET_TOL or abs(det_b) < SUB_DET_TOL:
        raise SubDeterminantZero(
            "point lies on a great circle through two vertices (0/0 locus)"
        )
    f_bc = f_vector(t, x, EdgeLabel.BC)
    f_ca = f_vector(t, x, EdgeLabel.CA)
    s = area(t, AreaMethod.TUYNMAN)
    return 2.0 * det3(f_bc, f_ca, x) / (s * det_a * det_b)
