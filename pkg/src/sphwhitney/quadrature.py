"""Quadrature over geodesic arcs and spherical triangles, plus the
verification suite for the Whitney normalization identities.

Arc integrals use Gauss-Legendre in the arc-length parameter.  Surface
integrals subdivide the triangle by geodesic midpoints and pull each cell
back to its flat chord triangle along rays from the center; the pullback
Jacobian det(A,B,C)/|p|^3 is exact, so the only error is the polynomial
rule's.  Sample nodes are strictly interior, which keeps the guarded 0/0
vertex limits of the Whitney integrands out of reach, and accumulation uses
compensated summation over a fixed enumeration so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre

from .area import AreaMethod, area, area_report
from .barycentric import EdgeLabel, barycentric
from .errors import AntipodalVertices, NonFiniteSample
from .forms import omega, whitney1
from .geom import ANTIPODAL_DOT_TOL, SphericalTriangle, normalize

__all__ = [
    "ArcRule",
    "TriangleRule",
    "VERIFY_TOLERANCES",
    "integrate_arc",
    "integrate_triangle",
    "verify_triangle",
]


@dataclass(frozen=True)
class ArcRule:
    """Gauss-Legendre point count per arc."""

    order: int = 32

    def __post_init__(self):
        if not 2 <= self.order <= 64:
            raise ValueError(f"arc rule order must be in [2, 64], got {self.order}")


@dataclass(frozen=True)
class TriangleRule:
    """Uniform 4-way geodesic-midpoint refinement plus a per-cell rule.

    ``points_per_cell`` is the 1-D Gauss order of the collapsed-square rule
    on the reference triangle (points_per_cell**2 interior nodes per cell).
    """

    subdivision_depth: int = 4
    points_per_cell: int = 12

    def __post_init__(self):
        if not 0 <= self.subdivision_depth <= 10:
            raise ValueError(
                f"subdivision depth must be in [0, 10], got {self.subdivision_depth}"
            )
        if not 1 <= self.points_per_cell <= 24:
            raise ValueError(
                f"points per cell must be in [1, 24], got {self.points_per_cell}"
            )


def integrate_arc(form, p, q, rule: ArcRule = ArcRule()) -> float:
    """Integrate a covector field along the geodesic arc from p to q.

    ``form`` maps a point to a Covector; the integrand is its action on the
    arc's velocity X'(s) with X(s) the arc-length parametrization.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    dot = float(p @ q)
    if dot <= -1.0 + ANTIPODAL_DOT_TOL:
        raise AntipodalVertices("arc endpoints are antipodal")
    theta = math.acos(min(1.0, max(-1.0, dot)))
    if theta < 1e-12:
        return 0.0
    sin_theta = math.sin(theta)
    nodes, weights = roots_legendre(rule.order)
    terms = []
    for xk, wk in zip(nodes, weights):
        s = (xk + 1.0) / 2.0
        x = (math.sin((1.0 - s) * theta) * p + math.sin(s * theta) * q) / sin_theta
        dx = theta * (-math.cos((1.0 - s) * theta) * p + math.cos(s * theta) * q) / sin_theta
        terms.append(0.5 * wk * form(x).apply(dx))
    return math.fsum(terms)


def _cell_rule(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Strictly interior nodes (u, v) and weights on {u,v >= 0, u+v <= 1},
    built by collapsing a tensor Gauss-Legendre rule on the unit square."""
    x, w = roots_legendre(n)
    xi = (x + 1.0) / 2.0
    wi = w / 2.0
    u = np.repeat(xi, n)
    v = np.tile(xi, n) * (1.0 - u)
    wt = np.repeat(wi * (1.0 - xi), n) * np.tile(wi, n)
    return u, v, wt


# Longest admissible cell side, radians.  The flat-chord pullback is only
# valid for cells inside an open hemisphere, and near-maximal triangles
# (area close to 2*pi) contract very slowly under midpoint refinement, so
# oversized cells left after the uniform levels are split further.  The
# bound also caps the per-cell rule error independently of the parent
# triangle's size.
_MAX_CELL_SIDE = 0.35


def _split4(va, vb, vc):
    d = normalize(va + vb)
    e = normalize(vb + vc)
    f = normalize(vc + va)
    return [(va, d, f), (d, vb, e), (f, e, vc), (d, e, f)]


def _max_side(va, vb, vc) -> float:
    m = min(float(va @ vb), float(vb @ vc), float(vc @ va))
    return math.acos(min(1.0, max(-1.0, m)))


def _subdivide(a: np.ndarray, b: np.ndarray, c: np.ndarray, depth: int) -> list:
    """Geodesic-midpoint refinement; cell order is fixed for determinism."""
    cells = [(a, b, c)]
    for _ in range(depth):
        refined = []
        for cell in cells:
            refined.extend(_split4(*cell))
        cells = refined
    out = []
    queue = list(cells)
    while queue:
        cell = queue.pop(0)
        if _max_side(*cell) > _MAX_CELL_SIDE:
            queue = _split4(*cell) + queue
        else:
            out.append(cell)
    return out


def integrate_triangle(density, t: SphericalTriangle, rule: TriangleRule = TriangleRule()) -> float:
    """Integrate a scalar field against the area measure of the triangle.

    ``density`` maps a unit vector to a float.  Every sample must be finite.
    """
    u, v, wt = _cell_rule(rule.points_per_cell)
    cells = _subdivide(t.vA, t.vB, t.vC, rule.subdivision_depth)
    terms = []
    for (va, vb, vc) in cells:
        det = float(va @ np.cross(vb, vc))
        pts = va[None, :] + np.outer(u, vb - va) + np.outer(v, vc - va)
        r = np.linalg.norm(pts, axis=1)
        jac = det / r**3
        xs = pts / r[:, None]
        for k in range(len(wt)):
            val = density(xs[k])
            if not math.isfinite(val):
                raise NonFiniteSample(f"density sample is not finite at {xs[k]!r}")
            terms.append(wt[k] * jac[k] * val)
    return math.fsum(terms)


# Tolerances mirror the package's acceptance targets at the default rules
# (arc order 32, depth 4).
VERIFY_TOLERANCES = {
    "arc_AB_on_AB": 1e-9,
    "arc_AB_on_BC": 1e-9,
    "arc_AB_on_CA": 1e-9,
    "arc_BC_on_AB": 1e-9,
    "arc_BC_on_BC": 1e-9,
    "arc_BC_on_CA": 1e-9,
    "arc_CA_on_AB": 1e-9,
    "arc_CA_on_BC": 1e-9,
    "arc_CA_on_CA": 1e-9,
    "surface_unit_integral": 1e-6,
    "partition_of_unity": 1e-12,
    "area_agreement": 1e-10,
    "omega_cyclic": 1e-9,
}


def _interior_lattice(t: SphericalTriangle, n: int = 6) -> list[np.ndarray]:
    pts = []
    for i in range(1, n - 1):
        for j in range(1, n - i - 1):
            k = n - i - j
            pts.append(normalize(i * t.vA + j * t.vB + k * t.vC))
    return pts


def verify_triangle(
    t: SphericalTriangle,
    arc_rule: ArcRule = ArcRule(),
    tri_rule: TriangleRule = TriangleRule(),
) -> dict[str, float]:
    """Residuals of the defining integral and algebraic identities.

    Keys match VERIFY_TOLERANCES; failures show up as large residuals, never
    as exceptions.
    """
    arcs = {
        EdgeLabel.AB: (t.vA, t.vB),
        EdgeLabel.BC: (t.vB, t.vC),
        EdgeLabel.CA: (t.vC, t.vA),
    }
    res: dict[str, float] = {}
    for e_form in EdgeLabel:
        for e_arc, (p, q) in arcs.items():
            val = integrate_arc(lambda x: whitney1(t, x, e_form), p, q, arc_rule)
            expected = 1.0 if e_form is e_arc else 0.0
            res[f"arc_{e_form.value}_on_{e_arc.value}"] = abs(val - expected)

    s = area(t, AreaMethod.TUYNMAN)
    surf = integrate_triangle(lambda x: omega(t, x) / s, t, tri_rule)
    res["surface_unit_integral"] = abs(surf - 1.0)

    samples = _interior_lattice(t)
    res["partition_of_unity"] = max(
        abs(sum(barycentric(t, x).as_tuple()) - 1.0) for x in samples
    )

    res["area_agreement"] = area_report(t).max_pairwise_discrepancy

    t2 = t.rotated()
    t3 = t2.rotated()
    worst = 0.0
    for x in samples:
        vals = (omega(t, x), omega(t2, x), omega(t3, x))
        scale = max(abs(v) for v in vals)
        spread = max(vals) - min(vals)
        worst = max(worst, spread / scale if scale > 0 else spread)
    res["omega_cyclic"] = worst
    return res
