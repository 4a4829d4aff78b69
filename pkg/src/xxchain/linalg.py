"""Dense determinant by LU factorization with partial pivoting."""

import numpy as np


def lu_det(a):
    """Determinant of a square matrix.

    Gaussian elimination with row partial pivoting on a private copy; each
    row swap flips the sign. Cost is O(n^3) with O(n) Python-level steps.
    """
    m = np.array(a, dtype=float, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        return 1.0
    det = 1.0
    for j in range(n):
        p = j + int(np.argmax(np.abs(m[j:, j])))
        pivot = m[p, j]
        if pivot == 0.0:
            return 0.0
        if p != j:
            m[[j, p]] = m[[p, j]]
            det = -det
        det *= pivot
        if j + 1 < n:
            factors = m[j + 1:, j] / pivot
            m[j + 1:, j + 1:] -= np.outer(factors, m[j, j + 1:])
    return float(det)
