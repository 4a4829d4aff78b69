import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from xxchain.linalg import lu_det


def leibniz_det(a):
    """Permutation-sum determinant, only usable for tiny matrices."""
    n = len(a)
    total = 0.0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = (-1.0) ** inversions
        for i, p in enumerate(perm):
            term *= a[i][p]
        total += term
    return total


def test_small_known_values():
    assert lu_det([[2.0]]) == 2.0
    assert lu_det([[0.0, 1.0], [1.0, 0.0]]) == -1.0
    assert lu_det(np.zeros((0, 0))) == 1.0
    assert lu_det([[1.0, 2.0], [2.0, 4.0]]) == 0.0


def test_pivoting_handles_zero_leading_entry():
    a = [[0.0, 2.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 3.0]]
    assert lu_det(a) == pytest.approx(leibniz_det(a), abs=1e-14)


@settings(max_examples=200, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(1, 5)).map(lambda t: (t[0], t[0])),
              elements=st.floats(-3, 3)))
def test_matches_permutation_sum(a):
    assert lu_det(a) == pytest.approx(leibniz_det(a), abs=1e-10)


def test_does_not_modify_input():
    a = np.arange(9.0).reshape(3, 3) + np.eye(3)
    before = a.copy()
    lu_det(a)
    np.testing.assert_array_equal(a, before)


def test_rejects_non_square():
    with pytest.raises(ValueError):
        lu_det(np.ones((2, 3)))
