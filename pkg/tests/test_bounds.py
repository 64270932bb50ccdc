import math

import numpy as np
import pytest

from numrange.bounds import (
    bound_classical,
    bound_corollary,
    bound_kittaneh_mean,
    bound_kittaneh_power,
    bound_report,
)
from numrange.errors import ZeroOperatorError
from numrange.linalg import NormKind, cartesian_split, norm, quadratic_form
from numrange.oracle import fov_sample, numerical_radius
from numrange.samples import NILPOTENT, RANK_ONE, sample_b

from conftest import random_complex, random_hermitian

BOUNDS = [bound_classical, bound_kittaneh_power, bound_kittaneh_mean, bound_corollary]


def test_classical_examples():
    assert bound_classical(NILPOTENT) == pytest.approx(1, abs=1e-15)
    assert bound_classical(np.eye(3)) == pytest.approx(1, abs=1e-15)
    assert bound_classical(RANK_ONE) == pytest.approx(math.sqrt(2), abs=1e-15)


def test_kittaneh_power_examples():
    assert bound_kittaneh_power(NILPOTENT) == pytest.approx(0.5, abs=1e-15)
    assert bound_kittaneh_power(np.eye(2)) == pytest.approx(1, abs=1e-15)
    c = 2 - 3j
    assert bound_kittaneh_power(c * np.eye(3)) == pytest.approx(abs(c), rel=1e-14)


def test_kittaneh_mean_examples():
    assert bound_kittaneh_mean(NILPOTENT) == pytest.approx(math.sqrt(0.5), abs=1e-15)
    assert bound_kittaneh_mean(np.eye(2)) == pytest.approx(1, abs=1e-15)
    assert bound_kittaneh_mean(np.diag([2.0, 0.0])) == pytest.approx(2, abs=1e-15)


def test_report_examples():
    r = bound_report(NILPOTENT)
    assert r.classical == r.spectral_norm == pytest.approx(1)
    assert (r.kittaneh_power, r.kittaneh_mean, r.corollary) == pytest.approx((0.5, 0.707107, 0.541196), abs=1e-6)
    assert r.ratios["corollary"] == pytest.approx(r.corollary)

    r = bound_report(np.eye(4))
    assert (r.classical, r.kittaneh_power, r.kittaneh_mean, r.corollary) == pytest.approx((1, 1, 1, 1), abs=1e-15)

    r = bound_report(sample_b())
    for v in (r.kittaneh_power, r.kittaneh_mean, r.corollary):
        assert 0 < v <= r.classical


def test_zero_operator():
    with pytest.raises(ZeroOperatorError):
        bound_report(np.zeros((2, 2)))
    r = bound_report(np.zeros((2, 2)), with_ratios=False)
    assert r.ratios is None and r.corollary == 0


def test_bounds_dominate_oracle_radius():
    rng = np.random.default_rng(99)
    for _ in range(500):
        m = int(rng.integers(2, 11))
        t = random_complex(rng, m, scale=10 ** rng.uniform(-1, 1))
        w = fov_sample(t, 90, 20, seed=3, refine=False).oracle_radius
        slack = 1e-8 * (1 + bound_classical(t))
        for b in BOUNDS:
            assert b(t) >= w - slack


def test_bounds_dominate_refined_radius(rng):
    for _ in range(40):
        t = random_complex(rng, int(rng.integers(2, 7)))
        w, _ = numerical_radius(cartesian_split(t))
        slack = 1e-8 * (1 + bound_classical(t))
        assert min(b(t) for b in BOUNDS) >= w - slack


def test_scale_equivariance(rng):
    for _ in range(50):
        t = random_complex(rng, int(rng.integers(2, 7)))
        c = complex(*rng.standard_normal(2)) * 10 ** rng.uniform(-2, 2)
        for b in BOUNDS[:3]:
            assert b(c * t) == pytest.approx(abs(c) * b(t), rel=1e-10)
        # the polygon is axis-aligned: only real factors and quarter turns commute with it
        r = rng.standard_normal() * 10 ** rng.uniform(-2, 2)
        for c in (r, 1j * r):
            assert bound_corollary(c * t) == pytest.approx(abs(c) * bound_corollary(t), rel=1e-10)


def test_corollary_bound_depends_on_orientation():
    t = np.array([[1, 2], [0, 1j]])
    rotated = np.exp(0.3j) * t
    assert abs(bound_corollary(rotated) - bound_corollary(t)) > 1e-3
    assert bound_classical(rotated) == pytest.approx(bound_classical(t), rel=1e-14)


def test_classical_is_tight_for_hermitian(rng):
    for _ in range(50):
        h = random_hermitian(rng, int(rng.integers(1, 8)))
        w, _ = numerical_radius(cartesian_split(h))
        assert bound_classical(h) == pytest.approx(w, abs=1e-9)


def test_one_norm_counterexample():
    u = np.array([math.sqrt(3) / 2, 0.5])
    assert abs(quadratic_form(RANK_ONE, u)) > norm(RANK_ONE, NormKind.ONE)
