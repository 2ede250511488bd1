"""Shared fixtures and random-sampling helpers for the test suite.

All randomness is seeded so every run exercises the identical sample sets.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

import sphwhitney as sw


def make_octant() -> sw.SphericalTriangle:
    return sw.make_triangle([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0])


def rotz(angle: float, v: np.ndarray) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]])


def make_fig1() -> sw.SphericalTriangle:
    return sw.make_triangle(
        sw.normalize([1.0, 0.0, 2.0]),
        sw.normalize([2.0, 1.0, 3.0]),
        np.array([0.0, 0.0, 1.0]),
    )


def make_fig3() -> sw.SphericalTriangle:
    a = sw.normalize([1.0, 0.0, 1.0])
    return sw.make_triangle(a, rotz(2 * math.pi / 3, a), rotz(4 * math.pi / 3, a))


def random_unit(rng: np.random.Generator) -> np.ndarray:
    return sw.normalize(rng.normal(size=3))


def random_triangle(rng: np.random.Generator) -> sw.SphericalTriangle:
    """Rejection-sample uniform unit triples until make_triangle accepts."""
    while True:
        try:
            return sw.make_triangle(random_unit(rng), random_unit(rng), random_unit(rng))
        except sw.errors.SphwhitneyError:
            continue


def interior_point(rng: np.random.Generator, t: sw.SphericalTriangle, margin: float = 0.08) -> np.ndarray:
    """Point strictly inside t: normalized positive combination of the vertices."""
    w = margin + (1.0 - 3.0 * margin) * rng.dirichlet((1.0, 1.0, 1.0))
    return sw.normalize(w[0] * t.vA + w[1] * t.vB + w[2] * t.vC)


def tangent_direction(rng: np.random.Generator, x: np.ndarray) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        vt = v - (v @ x) * x
        n = np.linalg.norm(vt)
        if n > 1e-6:
            return vt / n


def make_thin_triangle(apex_offset: float = 0.01) -> sw.SphericalTriangle:
    """Sliver with min interior angle of order apex_offset."""
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([0.0, 1.0, 0.0])
    d = sw.normalize(a + b)
    c = math.cos(apex_offset) * d + math.sin(apex_offset) * np.array([0.0, 0.0, 1.0])
    return sw.make_triangle(a, b, c)


@pytest.fixture
def octant() -> sw.SphericalTriangle:
    return make_octant()


@pytest.fixture
def fig1() -> sw.SphericalTriangle:
    return make_fig1()


@pytest.fixture
def fig3() -> sw.SphericalTriangle:
    return make_fig3()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240901)
