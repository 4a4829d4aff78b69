import math

import numpy as np
import pytest

from xxchain import oracle
from xxchain.errors import DomainError
from xxchain.kernel import (
    domain_wall_density,
    kernel_entry,
    kernel_matrix,
    magnetization,
    two_spin_density,
    xx_corr,
    zz_corr,
)

SQRT_HALF = math.sqrt(0.5)


def direct_kernel(n, k):
    """2 * sum_r S_l^r S_m^r by plain double loop."""
    g = np.zeros((n, n))
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            g[l - 1, m - 1] = 2 * sum(
                (2 / (n + 1)) * math.sin(math.pi * r * l / (n + 1)) * math.sin(math.pi * r * m / (n + 1))
                for r in range(1, k + 1))
    return g


@pytest.mark.parametrize("k, l, m, expected", [(0, 1, 2, 0.0), (1, 1, 2, 0.7071068), (2, 1, 1, 1.5)])
def test_kernel_entry(k, l, m, expected):
    assert kernel_entry(3, k, l, m) == pytest.approx(expected, abs=1e-7)


@pytest.mark.parametrize("args", [(3, 4, 1, 1), (3, -1, 1, 1), (3, 1, 0, 1), (3, 1, 1, 4)])
def test_kernel_entry_rejects_bad_indices(args):
    with pytest.raises(DomainError):
        kernel_entry(*args)


def test_kernel_matrix_examples():
    np.testing.assert_array_equal(kernel_matrix(3, 0).g, np.zeros((3, 3)))
    np.testing.assert_allclose(kernel_matrix(3, 3).g, 2 * np.eye(3), atol=1e-15)
    s1 = np.array([0.5, SQRT_HALF, 0.5])
    g = kernel_matrix(3, 1).g
    np.testing.assert_allclose(g, 2 * np.outer(s1, s1), atol=1e-15)
    assert np.linalg.matrix_rank(g) == 1


def test_kernel_matrix_is_immutable():
    with pytest.raises(ValueError):
        kernel_matrix(4, 2).g[0, 0] = 1.0


@pytest.mark.parametrize("n", [1, 2, 5, 13, 32, 60])
def test_closed_form_matches_direct_sum(n):
    for k in range(n + 1):
        g = kernel_matrix(n, k).g
        assert np.max(np.abs(g - direct_kernel(n, k))) < 1e-11
        if n <= 13:
            for l in range(1, n + 1):
                for m in range(1, n + 1):
                    assert kernel_entry(n, k, l, m) == pytest.approx(g[l - 1, m - 1], abs=1e-12)


@pytest.mark.parametrize("n", [7, 40, 100])
def test_kernel_invariants(n):
    for k in range(n + 1):
        g = kernel_matrix(n, k).g
        half = g / 2
        np.testing.assert_array_equal(g, g.T)
        assert np.all(np.diag(g) >= 0) and np.all(np.diag(g) <= 2)
        assert abs(np.trace(g) - 2 * k) < 1e-10
        assert np.max(np.abs(half @ half - half)) < 1e-10


def test_magnetization_examples():
    assert magnetization(kernel_matrix(3, 0), 1) == 1.0
    assert magnetization(kernel_matrix(3, 3), 2) == -1.0
    assert magnetization(kernel_matrix(3, 1), 1) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("n", [4, 19, 50])
def test_magnetization_sum_rule(n):
    for k in range(n + 1):
        kern = kernel_matrix(n, k)
        total = sum(magnetization(kern, l) for l in range(1, n + 1))
        assert abs(total - (n - 2 * k)) < 1e-10


def test_zz_examples():
    assert zz_corr(kernel_matrix(3, 0), 1, 2) == 1.0
    assert zz_corr(kernel_matrix(3, 1), 1, 2) == pytest.approx(-0.5, abs=1e-15)
    assert zz_corr(kernel_matrix(3, 3), 1, 3) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DomainError):
        zz_corr(kernel_matrix(3, 1), 2, 2)


def test_xx_examples():
    assert xx_corr(kernel_matrix(3, 0), 1, 2) == 0.0
    assert xx_corr(kernel_matrix(3, 1), 1, 2) == pytest.approx(0.7071068, abs=1e-7)
    assert xx_corr(kernel_matrix(3, 1), 1, 3) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(DomainError):
        xx_corr(kernel_matrix(3, 1), 2, 1)


def test_xx_nearest_neighbor_is_kernel_entry():
    for n in (5, 16):
        for k in range(n + 1):
            kern = kernel_matrix(n, k)
            for l in range(1, n):
                assert xx_corr(kern, l, l + 1) == kern.g[l - 1, l]


def test_two_spin_density_examples():
    d = two_spin_density(kernel_matrix(3, 0), 1, 2)
    assert (d.a_plus, d.a_minus, d.b_plus, d.b_minus, d.e) == (1.0, 0.0, 0.0, 0.0, 0.0)
    d = two_spin_density(kernel_matrix(3, 1), 1, 2)
    np.testing.assert_allclose([d.a_plus, d.a_minus, d.b_plus, d.b_minus, d.e],
                               [0.25, 0.0, 0.5, 0.25, 0.3535534], atol=1e-7)
    assert abs(d.e) == pytest.approx(math.sqrt(d.b_plus * d.b_minus), abs=1e-15)
    d = two_spin_density(kernel_matrix(3, 3), 1, 2)
    np.testing.assert_allclose([d.a_plus, d.a_minus, d.b_plus, d.b_minus, d.e], [0, 1, 0, 0, 0], atol=1e-15)


@pytest.mark.parametrize("n", [6, 21])
def test_two_spin_density_invariants(n):
    for k in range(n + 1):
        kern = kernel_matrix(n, k)
        for l in range(1, n + 1):
            for m in range(l + 1, min(n, l + 6) + 1):
                d = two_spin_density(kern, l, m)
                assert min(d.a_plus, d.a_minus, d.b_plus, d.b_minus) >= -1e-12
                assert abs(d.a_plus + d.a_minus + d.b_plus + d.b_minus - 1) < 1e-10
                assert abs(d.e) <= math.sqrt(max(d.b_plus * d.b_minus, 0)) + 1e-10


def test_two_spin_density_matches_oracle_matrix():
    psi = oracle.build_state(3, 0.5)
    np.testing.assert_allclose(two_spin_density(kernel_matrix(3, 1), 1, 2).as_matrix(),
                               oracle.reduced_density(psi, (1, 2)), atol=1e-10)


def test_domain_wall_density_examples():
    assert domain_wall_density(kernel_matrix(3, 0)) == 0.0
    assert domain_wall_density(kernel_matrix(3, 3)) == pytest.approx(0.0, abs=1e-15)
    assert domain_wall_density(kernel_matrix(3, 1)) == pytest.approx(0.75, abs=1e-15)
    with pytest.raises(DomainError):
        domain_wall_density(kernel_matrix(1, 0))


@pytest.mark.parametrize("n", [2, 5, 8, 10])
def test_correlators_match_oracle(n):
    for k in range(n + 1):
        kern = kernel_matrix(n, k)
        psi = oracle.slater_state(n, k)
        for l in range(1, n + 1):
            assert magnetization(kern, l) == pytest.approx(oracle.oracle_corr(psi, "z", (l,)), abs=1e-10)
            for m in range(l + 1, n + 1):
                assert zz_corr(kern, l, m) == pytest.approx(oracle.oracle_corr(psi, "zz", (l, m)), abs=1e-10)
                assert xx_corr(kern, l, m) == pytest.approx(oracle.oracle_corr(psi, "xx", (l, m)), abs=1e-10)


@pytest.mark.parametrize("n", [7, 12, 25])
def test_reflection_symmetry(n):
    for k in range(n + 1):
        kern = kernel_matrix(n, k)
        for l in range(1, n + 1):
            assert abs(magnetization(kern, l) - magnetization(kern, n + 1 - l)) < 1e-10
            for m in range(1, n + 1):
                if m != l:
                    assert abs(zz_corr(kern, l, m) - zz_corr(kern, n + 1 - l, n + 1 - m)) < 1e-10


def test_kernel_construction_is_deterministic():
    a = kernel_matrix(300, 117).g
    b = kernel_matrix(300, 117).g
    assert a.tobytes() == b.tobytes()
