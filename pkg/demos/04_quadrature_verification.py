"""The verification engine: every defining identity as a numerical residual.

Arc integrals use Gauss-Legendre along geodesics; surface integrals use
midpoint subdivision with an exact flat-chord (gnomonic) pullback Jacobian.
"""

import math

import sphwhitney as sw
from sphwhitney import ArcRule, AreaMethod, TriangleRule
from sphwhitney.quadrature import VERIFY_TOLERANCES

octant = sw.make_triangle([1, 0, 0], [0, 1, 0], [0, 0, 1])

print("quadrature sanity: integral of 1 over the octant")
for depth in (1, 2, 3):
    val = sw.integrate_triangle(lambda x: 1.0, octant, TriangleRule(depth))
    print(f"  depth {depth}: {val:.15f}   (exact pi/2 = {math.pi / 2:.15f})")

print("\nfull residual table (octant, defaults):")
res = sw.verify_triangle(octant)
for key in sorted(res):
    print(f"  {key:24s} {res[key]:.3e}   (tolerance {VERIFY_TOLERANCES[key]:.0e})")

print("\nsame identities on a thin sliver (apex angle ~0.01 rad):")
a, b = octant.vA, octant.vB
d = sw.normalize(a + b)
apex = math.cos(0.01) * d + math.sin(0.01) * octant.vC
thin = sw.make_triangle(a, b, apex)
res = sw.verify_triangle(thin, ArcRule(32), TriangleRule(6, 4))
print(f"  worst residual at depth 6: {max(res.values()):.3e}")
