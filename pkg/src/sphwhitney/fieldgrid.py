"""Hemisphere sampling of the omega density and its CSV interchange format.

CSV contract (version 1):

    # sphwhitney omega-grid v1
    # A=<x> <y> <z>
    # B=<x> <y> <z>
    # C=<x> <y> <z>
    # S=<area>
    # scaled=true|false
    # hemisphere=upper|lower
    # note=<free text>          (zero or more, e.g. figure-preset caveats)
    x,y,z,value
    <rows...>

Floats are written with 17 significant digits so files are byte-stable and
round-trip exactly.  The grid is uniform in the (x, y) projection plane;
rows cover every grid point with x^2 + y^2 <= 1 - 1e-12, ordered with y
varying slowest.  Rows inside the pole guard band (spherical radius 1e-3
around a vertex antipode) or on the guarded great-circle 0/0 locus carry an
empty value field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .area import AreaMethod, area
from .geom import SphericalTriangle, make_triangle, normalize

__all__ = [
    "CSV_HEADER",
    "POLE_GUARD_RADIUS",
    "FieldGrid",
    "sample_grid",
    "write_csv",
    "figure_preset",
    "FIGURE_NUMBERS",
]

CSV_HEADER = "# sphwhitney omega-grid v1"
POLE_GUARD_RADIUS = 1e-3

FIGURE_NUMBERS = (1, 2, 3, 4, 5, 6)


@dataclass
class FieldGrid:
    """Sampled scalar field over one hemisphere, ready for CSV emission."""

    triangle: SphericalTriangle
    hemisphere: str
    resolution: int
    scaled: bool
    area: float
    rows: list[tuple[float, float, float, float | None]]
    notes: list[str] = field(default_factory=list)


def _omega_batch(t: SphericalTriangle, pts: np.ndarray) -> np.ndarray:
    """Vectorized omega over an (n, 3) array of unit vectors.

    Guarded points (pole bands, vanishing sub-determinants) come back NaN;
    callers turn those into masked rows.  Values agree with forms.omega to
    roundoff.
    """
    a, b, c = t.vA, t.vB, t.vC
    da = pts @ a
    db = pts @ b
    dc = pts @ c
    guard = (
        (np.abs(1.0 + da) < 1e-9)
        | (np.abs(1.0 + db) < 1e-9)
        | (np.abs(1.0 + dc) < 1e-9)
    )
    # work on safe denominators; guarded entries are overwritten with NaN
    da_s = np.where(np.abs(1.0 + da) < 1e-9, 1.0, da)
    db_s = np.where(np.abs(1.0 + db) < 1e-9, 1.0, db)
    dc_s = np.where(np.abs(1.0 + dc) < 1e-9, 1.0, dc)

    def bracket(p, q, dp):
        # coefficient of p in the edge vector: 1 - q.(x+p)/(1+p.x)
        return 1.0 - (pts @ q + float(p @ q)) / (1.0 + dp)

    f_bc = (
        bracket(b, c, db_s)[:, None] * b[None, :]
        + bracket(c, b, dc_s)[:, None] * c[None, :]
    )
    f_ca = (
        bracket(c, a, dc_s)[:, None] * c[None, :]
        + bracket(a, c, da_s)[:, None] * a[None, :]
    )
    det_a = pts @ np.cross(b, c)
    det_b = pts @ np.cross(c, a)
    guard |= (np.abs(det_a) < 1e-12) | (np.abs(det_b) < 1e-12)
    det_a = np.where(np.abs(det_a) < 1e-12, 1.0, det_a)
    det_b = np.where(np.abs(det_b) < 1e-12, 1.0, det_b)
    num = np.einsum("ij,ij->i", np.cross(f_bc, f_ca), pts)
    s = area(t, AreaMethod.TUYNMAN)
    vals = 2.0 * num / (s * det_a * det_b)
    vals[guard] = np.nan
    return vals


def sample_grid(
    t: SphericalTriangle,
    hemisphere: str = "upper",
    resolution: int = 64,
    scaled: bool = True,
    notes: list[str] | None = None,
) -> FieldGrid:
    """Sample S*omega (or omega) on an n-by-n planar grid over one hemisphere."""
    if hemisphere not in ("upper", "lower"):
        raise ValueError(f"hemisphere must be 'upper' or 'lower', got {hemisphere!r}")
    if not 16 <= resolution <= 4096:
        raise ValueError(f"resolution must be in [16, 4096], got {resolution}")

    coords = np.linspace(-1.0, 1.0, resolution)
    gx, gy = np.meshgrid(coords, coords, indexing="xy")
    gx = gx.ravel()
    gy = gy.ravel()
    rho2 = gx * gx + gy * gy
    keep = rho2 <= 1.0 - 1e-12
    gx, gy, rho2 = gx[keep], gy[keep], rho2[keep]
    gz = np.sqrt(1.0 - rho2)
    if hemisphere == "lower":
        gz = -gz
    pts = np.column_stack([gx, gy, gz])

    # pole guard band: spherical distance below POLE_GUARD_RADIUS to any antipode
    cos_guard = math.cos(POLE_GUARD_RADIUS)
    banded = np.zeros(len(pts), dtype=bool)
    for v in t.vertices:
        banded |= pts @ (-v) > cos_guard

    vals = _omega_batch(t, pts)
    s = area(t, AreaMethod.TUYNMAN)
    if scaled:
        vals = s * vals
    masked = banded | ~np.isfinite(vals)

    rows = []
    for k in range(len(pts)):
        rows.append(
            (
                float(gx[k]),
                float(gy[k]),
                float(gz[k]),
                None if masked[k] else float(vals[k]),
            )
        )
    return FieldGrid(
        triangle=t,
        hemisphere=hemisphere,
        resolution=resolution,
        scaled=scaled,
        area=s,
        rows=rows,
        notes=list(notes or []),
    )


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_csv(grid: FieldGrid, stream) -> None:
    """Emit the v1 CSV; byte-identical output for identical inputs."""
    w = stream.write
    w(CSV_HEADER + "\n")
    for name, v in zip("ABC", grid.triangle.vertices):
        w(f"# {name}={_fmt(v[0])} {_fmt(v[1])} {_fmt(v[2])}\n")
    w(f"# S={_fmt(grid.area)}\n")
    w(f"# scaled={'true' if grid.scaled else 'false'}\n")
    w(f"# hemisphere={grid.hemisphere}\n")
    for note in grid.notes:
        w(f"# note={note}\n")
    w("x,y,z,value\n")
    for x, y, z, val in grid.rows:
        w(f"{_fmt(x)},{_fmt(y)},{_fmt(z)},{'' if val is None else _fmt(val)}\n")


def _rotz(angle: float, v: np.ndarray) -> np.ndarray:
    ca, sa = math.cos(angle), math.sin(angle)
    return np.array([ca * v[0] - sa * v[1], sa * v[0] + ca * v[1], v[2]])


def figure_preset(number: int) -> tuple[SphericalTriangle, str, list[str]]:
    """Triangle, hemisphere, and caveat notes for the six built-in presets.

    Presets 1/2 use the skew triangle with A renormalized to unit length
    (the stated 1/sqrt(2) factor does not normalize e_x + 2 e_z); presets
    3/4 use the equilateral triangle of z-axis rotations; presets 5/6 read
    the mirrored configuration as the triangle (A, B, C) with
    B = (2 e_x + e_y - 3 e_z)/sqrt(14), whose antipode -B lies in the upper
    hemisphere.
    """
    if number not in FIGURE_NUMBERS:
        raise ValueError(f"figure preset must be one of {FIGURE_NUMBERS}, got {number}")
    if number in (1, 2):
        tri = make_triangle(
            normalize([1.0, 0.0, 2.0]),
            normalize([2.0, 1.0, 3.0]),
            np.array([0.0, 0.0, 1.0]),
        )
        notes = [
            "A normalized as (e_x + 2 e_z)/sqrt(5); the stated sqrt(2) factor is not unit-norm"
        ]
    elif number in (3, 4):
        a = normalize([1.0, 0.0, 1.0])
        tri = make_triangle(a, _rotz(2.0 * math.pi / 3.0, a), _rotz(4.0 * math.pi / 3.0, a))
        notes = []
    else:
        tri = make_triangle(
            normalize([1.0, 0.0, 2.0]),
            normalize([2.0, 1.0, -3.0]),
            np.array([0.0, 0.0, 1.0]),
        )
        notes = [
            "A normalized as (e_x + 2 e_z)/sqrt(5); the stated sqrt(2) factor is not unit-norm",
            "triangle read as (A, B, C) with B = (2 e_x + e_y - 3 e_z)/sqrt(14); -B lies in the upper hemisphere",
        ]
    hemisphere = "upper" if number % 2 == 1 else "lower"
    return tri, hemisphere, notes
