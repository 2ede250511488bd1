"""Barycentric coordinates on a spherical triangle as area ratios.

A point X inside the triangle splits it into three positively oriented
sub-triangles; their areas over the total are the three scalar interpolants
lambda_A, lambda_B, lambda_C.  They sum to one everywhere, reduce to a
Kronecker delta at the vertices, and vanish along the opposite edges.
"""

import numpy as np

import sphwhitney as sw

t = sw.make_triangle([1, 0, 0], [0, 1, 0], [0, 0, 1])

print("point                         lambda_A  lambda_B  lambda_C   sum")
samples = {
    "vertex A": t.vA,
    "vertex B": t.vB,
    "centroid": sw.normalize([1, 1, 1]),
    "midpoint of AB": sw.geodesic_point(t.vA, t.vB, 0.5),
    "quarter along BC": sw.geodesic_point(t.vB, t.vC, 0.25),
    "interior (0.5, 0.3, 0.2)-ish": sw.normalize(0.5 * t.vA + 0.3 * t.vB + 0.2 * t.vC),
}
for name, x in samples.items():
    lam = sw.barycentric(t, x)
    print(
        f"{name:28s}  {lam.lA:8.5f}  {lam.lB:8.5f}  {lam.lC:8.5f}   {sum(lam.as_tuple()):.12f}"
    )

print("\nSub-areas at the centroid (each one third of the total):")
s = sw.sub_areas(t, sw.normalize([1, 1, 1]))
print(f"  S_A = {s.sA:.12f}, S_B = {s.sB:.12f}, S_C = {s.sC:.12f}")
print(f"  total = {s.total:.12f},  sum of parts = {s.sA + s.sB + s.sC:.12f}")

print("\nOutside points are rejected:")
try:
    sw.barycentric(t, sw.normalize([-1, 1, 1]))
except sw.errors.OutsideTriangle as exc:
    print(f"  OutsideTriangle: {exc}")
