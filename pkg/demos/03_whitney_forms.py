"""The differential layer: gradients of the barycentric coordinates and the
edge (1-form) and face (2-form) interpolants built from them.

The defining property of the edge forms is the 3x3 matrix of arc integrals:
integrating the form of edge e along arc e' gives exactly delta_{ee'}.
"""

import numpy as np

import sphwhitney as sw
from sphwhitney import ArcRule, AreaMethod, EdgeLabel, VertexLabel

t = sw.make_triangle(sw.normalize([1, 0, 2]), sw.normalize([2, 1, 3]), [0, 0, 1])
x = sw.normalize(0.4 * t.vA + 0.35 * t.vB + 0.25 * t.vC)

print("gradient check against central finite differences (h = 1e-5):")
h = 1e-5
basis = sw.tangent_basis(x)
for v, getter in ((VertexLabel.A, lambda l: l.lA), (VertexLabel.B, lambda l: l.lB)):
    analytic = sw.d_lambda(t, x, v).apply(basis.e1)
    fd = (
        getter(sw.barycentric(t, sw.normalize(x + h * basis.e1)))
        - getter(sw.barycentric(t, sw.normalize(x - h * basis.e1)))
    ) / (2 * h)
    print(f"  d lambda_{v.value}(e1):  analytic {analytic:+.10f}   fd {fd:+.10f}")

print("\narc-integral matrix of the edge forms (rows: form, cols: arc):")
arcs = {EdgeLabel.AB: (t.vA, t.vB), EdgeLabel.BC: (t.vB, t.vC), EdgeLabel.CA: (t.vC, t.vA)}
rule = ArcRule(32)
for e_form in EdgeLabel:
    row = [
        sw.integrate_arc(lambda y: sw.whitney1(t, y, e_form), p, q, rule)
        for (p, q) in arcs.values()
    ]
    print("  " + "  ".join(f"{v:+.12f}" for v in row))

print("\nface form versus the scalar density:")
w2 = sw.whitney2(t, x)
s = sw.area(t, AreaMethod.TUYNMAN)
print(f"  whitney2(e1, e2)   = {w2.apply(basis.e1, basis.e2):.12f}")
print(f"  omega(x) / S       = {sw.omega(t, x) / s:.12f}")

print("\nomega is defined globally (poles only at the vertex antipodes):")
far = sw.normalize([-1.0, 0.4, -0.3])
print(f"  omega at a far point = {sw.omega(t, far):+.6f}")
