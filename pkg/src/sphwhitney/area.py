"""Oriented area of a geodesic triangle by six equivalent formulas.

Every route produces both sin(S/2) and cos(S/2) and combines them with the
two-argument arctangent, which is exact on the whole admissible range
S in (0, 2*pi).  The methods differ in which published formula supplies the
primary value and which redundant one resolves the branch, so pairwise
agreement is a genuine cross-check rather than a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .geom import SphericalTriangle, det3, midpoints, side_lengths

__all__ = [
    "AreaMethod",
    "AreaReport",
    "area",
    "gram_det",
    "angular_excess",
    "area_report",
]


class AreaMethod(Enum):
    TUYNMAN = "tuynman"
    EULER = "euler"
    CAGNOLI = "cagnoli"
    MIDPOINT_TUYNMAN = "midpoint-tuynman"
    MIDPOINT_CAGNOLI = "midpoint-cagnoli"
    MIDPOINT_EULER = "midpoint-euler"


def _clamp_unit(x: float, tol: float = 1e-12) -> float:
    """Clamp an inverse-trig argument to [-1, 1]; beyond ``tol`` outside is an error."""
    if x > 1.0:
        if x - 1.0 > tol:
            raise ValueError(f"inverse-trig argument {x!r} exceeds 1 beyond tolerance")
        return 1.0
    if x < -1.0:
        if -1.0 - x > tol:
            raise ValueError(f"inverse-trig argument {x!r} below -1 beyond tolerance")
        return -1.0
    return x


def _clamp_nonneg(x: float, tol: float = 1e-14) -> float:
    """Clamp a tiny negative radicand to zero; below ``-tol`` is an error."""
    if x < 0.0:
        if x < -tol:
            raise ValueError(f"radicand {x!r} is negative beyond tolerance")
        return 0.0
    return x


# Symmetric combinations of the three side cosines are evaluated on sorted
# operands, so a cyclic relabeling of the vertices reproduces results
# bitwise instead of within a few ulps.


def gram_det(t: SphericalTriangle) -> float:
    """det of the pairwise-dot (Gram) matrix; equals detM squared."""
    ca, cb, cc = sorted((t.cBC, t.cCA, t.cAB))
    return 1.0 - ca * ca - cb * cb - cc * cc + 2.0 * ca * cb * cc


def _euler_pair(t: SphericalTriangle) -> tuple[float, float]:
    """(sin, cos) of S/2 from the side-length forms (intermediate + Euler)."""
    a, b, c = sorted(side_lengths(t))
    denom = 4.0 * math.cos(a / 2.0) * math.cos(b / 2.0) * math.cos(c / 2.0)
    ca, cb, cc = sorted((t.cBC, t.cCA, t.cAB))
    cos_half = (1.0 + ca + cb + cc) / denom
    sin_half = math.sqrt(_clamp_nonneg(gram_det(t))) / denom
    return sin_half, cos_half


def _medial_cos_half(t: SphericalTriangle) -> float:
    """cos(S/2) from the medial side lengths, sign resolved by the Euler numerator."""
    d, e, f = midpoints(t)
    cd, ce, cf = sorted((float(e @ f), float(f @ d), float(d @ e)))
    mag = math.sqrt(_clamp_nonneg(cd * cd + ce * ce + cf * cf - 2.0 * cd * ce * cf))
    sign = 1.0 if (1.0 + t.cBC + t.cCA + t.cAB) >= 0.0 else -1.0
    return sign * mag


def area(t: SphericalTriangle, method: AreaMethod) -> float:
    """Oriented area in steradians, S in (0, 2*pi)."""
    if method is AreaMethod.TUYNMAN:
        denom = math.sqrt(2.0 * (1.0 + t.cAB) * (1.0 + t.cBC) * (1.0 + t.cCA))
        sin_half = t.detM / denom
        cos_half = (1.0 + t.cAB + t.cBC + t.cCA) / denom
    elif method is AreaMethod.EULER:
        sin_half, cos_half = _euler_pair(t)
    elif method is AreaMethod.CAGNOLI:
        a, b, c = sorted(side_lengths(t))
        s = (a + b + c) / 2.0
        rad = math.sin(s) * math.sin(s - a) * math.sin(s - b) * math.sin(s - c)
        sin_half = math.sqrt(_clamp_nonneg(rad)) / (
            2.0 * math.cos(a / 2.0) * math.cos(b / 2.0) * math.cos(c / 2.0)
        )
        cos_half = _euler_pair(t)[1]
    elif method is AreaMethod.MIDPOINT_TUYNMAN:
        d, e, f = midpoints(t)
        sin_half = det3(d, e, f)
        cos_half = _euler_pair(t)[1]
    elif method is AreaMethod.MIDPOINT_CAGNOLI:
        dm, em, fm = midpoints(t)
        d, e, f = sorted(
            math.acos(_clamp_unit(dot))
            for dot in (float(em @ fm), float(fm @ dm), float(dm @ em))
        )
        tt = (d + e + f) / 2.0
        rad = math.sin(tt) * math.sin(tt - d) * math.sin(tt - e) * math.sin(tt - f)
        sin_half = 2.0 * math.sqrt(_clamp_nonneg(rad))
        cos_half = _medial_cos_half(t)
    elif method is AreaMethod.MIDPOINT_EULER:
        d, e, f = midpoints(t)
        sin_half = det3(d, e, f)
        cos_half = _medial_cos_half(t)
    else:  # pragma: no cover
        raise ValueError(f"unknown area method {method!r}")
    return 2.0 * math.atan2(sin_half, cos_half)


def angular_excess(t: SphericalTriangle) -> float:
    """Interior-angle sum minus pi, via the spherical law of cosines."""
    ca, cb, cc = t.cBC, t.cCA, t.cAB
    sa = math.sqrt(1.0 - ca * ca)
    sb = math.sqrt(1.0 - cb * cb)
    sc = math.sqrt(1.0 - cc * cc)
    alpha = math.acos(_clamp_unit((ca - cb * cc) / (sb * sc)))
    beta = math.acos(_clamp_unit((cb - cc * ca) / (sc * sa)))
    gamma = math.acos(_clamp_unit((cc - ca * cb) / (sa * sb)))
    return alpha + beta + gamma - math.pi


@dataclass(frozen=True)
class AreaReport:
    """All area evaluations of one triangle side by side."""

    s_tuynman: float
    s_euler: float
    s_cagnoli: float
    s_mid_tuynman: float
    s_mid_cagnoli: float
    s_mid_euler: float
    gram_det: float
    semiperimeter_s: float
    semiperimeter_t: float
    angular_excess: float
    max_pairwise_discrepancy: float

    def methods(self) -> dict[AreaMethod, float]:
        return {
            AreaMethod.TUYNMAN: self.s_tuynman,
            AreaMethod.EULER: self.s_euler,
            AreaMethod.CAGNOLI: self.s_cagnoli,
            AreaMethod.MIDPOINT_TUYNMAN: self.s_mid_tuynman,
            AreaMethod.MIDPOINT_CAGNOLI: self.s_mid_cagnoli,
            AreaMethod.MIDPOINT_EULER: self.s_mid_euler,
        }

    def as_dict(self) -> dict:
        d = {f"area_{m.value}": v for m, v in self.methods().items()}
        d.update(
            gram_det=self.gram_det,
            semiperimeter_s=self.semiperimeter_s,
            semiperimeter_t=self.semiperimeter_t,
            angular_excess=self.angular_excess,
            max_pairwise_discrepancy=self.max_pairwise_discrepancy,
        )
        return d


def area_report(t: SphericalTriangle) -> AreaReport:
    """Evaluate every method plus the excess and Gram cross-checks."""
    values = {m: area(t, m) for m in AreaMethod}
    a, b, c = side_lengths(t)
    dm, em, fm = midpoints(t)
    d = math.acos(_clamp_unit(float(em @ fm)))
    e = math.acos(_clamp_unit(float(fm @ dm)))
    f = math.acos(_clamp_unit(float(dm @ em)))
    disc = max(abs(x - y) for x, y in combinations(values.values(), 2))
    return AreaReport(
        s_tuynman=values[AreaMethod.TUYNMAN],
        s_euler=values[AreaMethod.EULER],
        s_cagnoli=values[AreaMethod.CAGNOLI],
        s_mid_tuynman=values[AreaMethod.MIDPOINT_TUYNMAN],
        s_mid_cagnoli=values[AreaMethod.MIDPOINT_CAGNOLI],
        s_mid_euler=values[AreaMethod.MIDPOINT_EULER],
        gram_det=gram_det(t),
        semiperimeter_s=(a + b + c) / 2.0,
        semiperimeter_t=(d + e + f) / 2.0,
        angular_excess=angular_excess(t),
        max_pairwise_discrepancy=disc,
    )
