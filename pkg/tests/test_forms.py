import math

import numpy as np
import pytest
from scipy.stats import special_ortho_group

import sphwhitney as sw
from sphwhitney import AreaMethod, EdgeLabel, VertexLabel
from sphwhitney.errors import (
    DegenerateSubTriangle,
    PoleProximity,
    SubDeterminantZero,
)

from conftest import interior_point, random_triangle, random_unit, tangent_direction

EX = np.array([1.0, 0.0, 0.0])
EY = np.array([0.0, 1.0, 0.0])
EZ = np.array([0.0, 0.0, 1.0])
CENTROID = sw.normalize([1.0, 1.0, 1.0])

OMEGA_OCTANT_CENTROID = 6.0 * (2.0 * math.sqrt(3.0) - 3.0) / math.pi

LAMBDA_GETTER = {
    VertexLabel.A: lambda lam: lam.lA,
    VertexLabel.B: lambda lam: lam.lB,
    VertexLabel.C: lambda lam: lam.lC,
}


def fd_lambda(t, x, v, direction, h=1e-5):
    getter = LAMBDA_GETTER[v]
    fp = getter(sw.barycentric(t, sw.normalize(x + h * direction)))
    fm = getter(sw.barycentric(t, sw.normalize(x - h * direction)))
    return (fp - fm) / (2 * h)


class TestCovector:
    def test_apply_projects(self, octant):
        cov = sw.d_lambda(octant, CENTROID, VertexLabel.A)
        v = np.array([0.3, -0.1, 0.7])
        assert cov.apply(v) == pytest.approx(cov.apply(v + 3.0 * CENTROID), abs=1e-12)

    def test_tangent_components(self, octant):
        cov = sw.d_lambda(octant, CENTROID, VertexLabel.A)
        basis = sw.tangent_basis(CENTROID)
        c1, c2 = cov.tangent_components(basis)
        assert c1 == pytest.approx(cov.apply(basis.e1), abs=1e-15)
        assert c2 == pytest.approx(cov.apply(basis.e2), abs=1e-15)


class TestFVector:
    def test_octant_vertex(self, octant):
        np.testing.assert_allclose(sw.f_vector(octant, EX, EdgeLabel.BC), [0, 1, 1], atol=1e-15)

    def test_octant_centroid(self, octant):
        k = math.sqrt(3.0) / (math.sqrt(3.0) + 1.0)
        np.testing.assert_allclose(
            sw.f_vector(octant, CENTROID, EdgeLabel.BC), [0.0, k, k], atol=1e-12
        )

    def test_endpoint_symmetry(self, rng):
        # swapping the edge's endpoint labels leaves the vector unchanged
        for _ in range(50):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            f = sw.f_vector(t, x, EdgeLabel.CA)
            c, a = t.vC, t.vA
            swapped = (1.0 - float(c @ (x + a)) / (1.0 + float(a @ x))) * a + (
                1.0 - float(a @ (x + c)) / (1.0 + float(c @ x))
            ) * c
            np.testing.assert_allclose(f, swapped, atol=1e-14)


class TestDSubArea:
    def test_near_vertex_limit(self, octant):
        x = sw.geodesic_point(EX, CENTROID, 1e-3)
        val = sw.d_sub_area(octant, x, VertexLabel.A).apply(EY)
        assert abs(val - (-1.0)) <= 2e-3

    def test_finite_difference_at_centroid(self, octant):
        s = sw.area(octant, AreaMethod.TUYNMAN)
        basis = sw.tangent_basis(CENTROID)
        for direction in (basis.e1, basis.e2):
            an = sw.d_sub_area(octant, CENTROID, VertexLabel.A).apply(direction)
            fd = s * fd_lambda(octant, CENTROID, VertexLabel.A, direction)
            assert abs(fd - an) <= 1e-6 * max(1.0, abs(an))

    def test_zero_sum(self, rng):
        for _ in range(100):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            v = tangent_direction(rng, x)
            total = sum(sw.d_sub_area(t, x, lab).apply(v) for lab in VertexLabel)
            assert abs(total) <= 1e-10

    def test_degenerate_locus_rejected(self, octant):
        # x on the far edge BC makes the sub-determinant vanish
        x = sw.geodesic_point(EY, EZ, 0.5)
        with pytest.raises(DegenerateSubTriangle):
            sw.d_sub_area(octant, x, VertexLabel.A)


class TestDLambda:
    def test_vertex_limit_value(self, octant):
        x = sw.geodesic_point(EX, CENTROID, 1e-3)
        val = sw.d_lambda(octant, x, VertexLabel.A).apply(EY)
        assert abs(val - (-2.0 / math.pi)) <= 2e-3

    def test_zero_sum(self, rng):
        for _ in range(100):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            v = tangent_direction(rng, x)
            total = sum(sw.d_lambda(t, x, lab).apply(v) for lab in VertexLabel)
            assert abs(total) <= 1e-10

    def test_matches_finite_differences(self, rng):
        for _ in range(100):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            direction = tangent_direction(rng, x)
            for lab in VertexLabel:
                an = sw.d_lambda(t, x, lab).apply(direction)
                fd = fd_lambda(t, x, lab, direction)
                assert abs(fd - an) <= 1e-5 * max(abs(an), 1e-6)


class TestWhitney1:
    def test_combined_equals_composed(self, rng):
        for _ in range(100):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            lam = sw.barycentric(t, x)
            d_a = sw.d_lambda(t, x, VertexLabel.A)
            d_b = sw.d_lambda(t, x, VertexLabel.B)
            composed = lam.lA * d_b.coeff - lam.lB * d_a.coeff
            explicit = sw.whitney1(t, x, EdgeLabel.AB).coeff
            np.testing.assert_allclose(explicit, composed, atol=1e-11)

    def test_orientation_antisymmetry(self, octant, rng):
        tris = [octant] + [random_triangle(rng) for _ in range(20)]
        for t in tris:
            x = interior_point(rng, t)
            fwd = sw.whitney1_oriented(t, x, VertexLabel.A, VertexLabel.B).coeff
            rev = sw.whitney1_oriented(t, x, VertexLabel.B, VertexLabel.A).coeff
            np.testing.assert_array_equal(fwd, -rev)

    def test_finite_on_far_edge(self, octant):
        # the 0/0 locus is resolved by its tangential limit, and the form
        # annihilates the edge direction there
        x = sw.geodesic_point(EY, EZ, 0.37)
        cov = sw.whitney1(octant, x, EdgeLabel.AB)
        assert np.all(np.isfinite(cov.coeff))
        theta = math.pi / 2
        velocity = theta * (
            -math.cos((1 - 0.37) * theta) * EY + math.cos(0.37 * theta) * EZ
        )
        assert abs(cov.apply(velocity)) <= 1e-9


class TestWhitney2:
    def test_antisymmetry_and_diagonal(self, octant, rng):
        w = sw.whitney2(octant, CENTROID)
        v1 = tangent_direction(rng, CENTROID)
        v2 = tangent_direction(rng, CENTROID)
        assert w.apply(v1, v1) == 0.0
        assert w.apply(v1, v2) == pytest.approx(-w.apply(v2, v1), abs=1e-15)

    def test_density_consistency(self, rng):
        # both routes evaluate det(F_BC, F_CA, X) up to rounding of the
        # F-vector products, so the achievable agreement scales with
        # eps * |F_BC| * |F_CA| * coeff (slivers amplify it enormously)
        for _ in range(100):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            basis = sw.tangent_basis(x)
            w = sw.whitney2(t, x)
            lhs = w.apply(basis.e1, basis.e2)
            rhs = sw.omega(t, x) / sw.area(t, AreaMethod.TUYNMAN)
            noise = np.linalg.norm(w.u) * np.linalg.norm(w.v) * abs(w.coeff)
            assert abs(lhs - rhs) <= 1e-10 + 1e-14 * noise

    def test_density_consistency_canonical(self, octant, fig1, fig3, rng):
        for t in (octant, fig1, fig3):
            for _ in range(100):
                x = interior_point(rng, t)
                basis = sw.tangent_basis(x)
                lhs = sw.whitney2(t, x).apply(basis.e1, basis.e2)
                rhs = sw.omega(t, x) / sw.area(t, AreaMethod.TUYNMAN)
                assert abs(lhs - rhs) <= 1e-10

    def test_pair_choice_independence(self, rng):
        # 2 dA^dB = 2 dB^dC = 2 dC^dA evaluated on the oriented basis
        for _ in range(50):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            basis = sw.tangent_basis(x)
            coeffs = {lab: sw.d_lambda(t, x, lab).coeff for lab in VertexLabel}

            def wedge(u, v):
                return 2.0 * (
                    float(u @ basis.e1) * float(v @ basis.e2)
                    - float(u @ basis.e2) * float(v @ basis.e1)
                )

            ab = wedge(coeffs[VertexLabel.A], coeffs[VertexLabel.B])
            bc = wedge(coeffs[VertexLabel.B], coeffs[VertexLabel.C])
            ca = wedge(coeffs[VertexLabel.C], coeffs[VertexLabel.A])
            norms = {lab: np.linalg.norm(c) for lab, c in coeffs.items()}
            noise = 2.0 * max(norms.values()) ** 2
            assert abs(ab - bc) <= 1e-10 + 1e-14 * noise
            assert abs(ab - ca) <= 1e-10 + 1e-14 * noise


class TestOmega:
    def test_octant_centroid_value(self, octant):
        val = sw.omega(octant, CENTROID)
        assert abs(val - OMEGA_OCTANT_CENTROID) <= 1e-12
        assert abs(val - 0.88631) <= 1e-4

    def test_cyclic_invariance(self, rng):
        worst = 0.0
        for _ in range(1000):
            t = random_triangle(rng)
            t2 = t.rotated()
            t3 = t2.rotated()
            while True:
                x = random_unit(rng)
                try:
                    vals = (sw.omega(t, x), sw.omega(t2, x), sw.omega(t3, x))
                    break
                except sw.errors.SphwhitneyError:
                    continue
            scale = max(abs(v) for v in vals)
            worst = max(worst, (max(vals) - min(vals)) / scale)
        assert worst <= 1e-9

    def test_rotation_equivariance(self, rng):
        # rotated inputs round differently; the achievable agreement scales
        # with the F-product magnitude over the determinant denominators
        for k in range(100):
            t = random_triangle(rng)
            x = interior_point(rng, t)
            rot = special_ortho_group.rvs(3, random_state=k)
            t2 = sw.make_triangle(rot @ t.vA, rot @ t.vB, rot @ t.vC)
            u = sw.f_vector(t, x, EdgeLabel.BC)
            v = sw.f_vector(t, x, EdgeLabel.CA)
            det_a = sw.det3(t.vB, t.vC, x)
            det_b = sw.det3(t.vC, t.vA, x)
            s = sw.area(t, AreaMethod.TUYNMAN)
            noise = 2.0 * np.linalg.norm(u) * np.linalg.norm(v) / (s * abs(det_a * det_b))
            diff = abs(sw.omega(t2, sw.normalize(rot @ x)) - sw.omega(t, x))
            assert diff <= 1e-10 + 1e-14 * noise

    def test_defined_outside_triangle(self, octant):
        x = sw.normalize([-1.0, 0.3, 0.4])
        assert math.isfinite(sw.omega(octant, x))

    def test_pole_divergence(self, octant):
        # approach -A transversally: |omega| grows without bound
        u = EY
        vals = []
        for d in (1e-1, 1e-2, 1e-3, 1e-4):
            x = sw.normalize(-EX * math.cos(d) + u * math.sin(d))
            vals.append(abs(sw.omega(octant, x)))
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 1e4

    def test_pole_guard(self, octant):
        d = 1e-5
        x = sw.normalize(-EX * math.cos(d) + EY * math.sin(d))
        with pytest.raises(PoleProximity):
            sw.omega(octant, x)

    def test_great_circle_guard(self, octant):
        with pytest.raises(SubDeterminantZero):
            sw.omega(octant, sw.normalize([0.0, 1.0, 1.0]))
