"""Fermionic two-point kernel and the spin correlators built from it.

For the ground state of region ``k`` the kernel is

    g[l, m] = 2 * sum_{r=1..k} S_l^r S_m^r

with ``S`` the sine mode amplitudes. ``g / 2`` is the projector onto the
emptied modes, so ``<sz_l> = 1 - g[l, l]`` and Wick's theorem gives the zz
correlator. The xx correlator is the determinant of the block of ``g - 1``
with rows ``l..m-1`` and columns ``l+1..m`` (the Jordan-Wigner string).
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DomainError
from .linalg import lu_det
from .spectrum import crossing_fields, sine_table, _check_n

# Below this gap between cosines the closed form loses digits; sum directly.
DEGENERACY_GAP = 1e-8
# Pair populations below this are recomputed as sums of squares, since the
# concurrence takes their square root.
POPULATION_REFINE = 1e-6
_SUM_BLOCK = 256


@dataclass(frozen=True, eq=False)
class CorrelationKernel:
    n: int
    k: int
    g: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.g.setflags(write=False)

    def _site(self, l):
        if not 1 <= l <= self.n:
            raise DomainError(f"site index must lie in [1, {self.n}], got {l}")
        return l - 1


@dataclass(frozen=True)
class TwoSpinDensity:
    """Two-site reduced state, X-shaped in the sz basis.

    ``a_plus``/``a_minus`` are the up-up/down-down populations, ``b_plus`` is
    site l up with site m down, ``b_minus`` the reverse, and ``e`` the
    coherence between the two single-flip configurations.
    """

    a_plus: float
    a_minus: float
    b_plus: float
    b_minus: float
    e: float

    def as_matrix(self) -> np.ndarray:
        """4x4 matrix in the basis (up-up, up-down, down-up, down-down)."""
        rho = np.diag([self.a_plus, self.b_plus, self.b_minus, self.a_minus])
        rho[1, 2] = rho[2, 1] = self.e
        return rho


def _check_region(n, k):
    n = _check_n(n)
    if not 0 <= k <= n:
        raise DomainError(f"region index k must lie in [0, {n}], got {k}")
    return n


def _mode_sum(n, first, last, ls, ms):
    """sum_{r=first..last} S_l^r S_m^r for paired site arrays."""
    total = np.zeros(ls.shape, dtype=float)
    for start in range(first, last + 1, _SUM_BLOCK):
        modes = np.arange(start, min(start + _SUM_BLOCK, last + 1))
        total += np.sum(sine_table(n, modes, ls) * sine_table(n, modes, ms), axis=-1)
    return total


def _direct_sum(n, k, ls, ms):
    """2 * sum_{r<=k} S_l^r S_m^r for paired site arrays.

    Past half filling the empty modes are summed instead (completeness of the
    sine basis), which keeps the full-band diagonal at exactly 2.
    """
    ls = np.asarray(ls, dtype=np.int64)
    ms = np.asarray(ms, dtype=np.int64)
    if 2 * k <= n:
        return 2.0 * _mode_sum(n, 1, k, ls, ms)
    return 2.0 * ((ls == ms) - _mode_sum(n, k + 1, n, ls, ms))


def kernel_entry(n: int, k: int, l: int, m: int) -> float:
    n = _check_region(n, k)
    for site in (l, m):
        if not 1 <= site <= n:
            raise DomainError(f"site index must lie in [1, {n}], got {site}")
    if k == 0:
        return 0.0
    cos = crossing_fields(n)
    gap = cos[l - 1] - cos[m - 1]
    if l == m or abs(gap) < DEGENERACY_GAP:
        return float(_direct_sum(n, k, [l], [m])[0])
    s = sine_table(n, [k, k + 1], [l, m])
    return float((s[0, 1] * s[1, 0] - s[0, 0] * s[1, 1]) / gap)


def kernel_matrix(n: int, k: int) -> CorrelationKernel:
    n = _check_region(n, k)
    if k == 0:
        return CorrelationKernel(n, k, np.zeros((n, n)))
    sites = np.arange(1, n + 1)
    cos = crossing_fields(n)
    s = sine_table(n, [k, k + 1], sites)
    sk, sk1 = s[:, 0], s[:, 1]
    gap = np.subtract.outer(cos, cos)
    near = np.abs(gap) < DEGENERACY_GAP
    with np.errstate(divide="ignore", invalid="ignore"):
        g = (np.outer(sk1, sk) - np.outer(sk, sk1)) / np.where(near, 1.0, gap)
    rows, cols = np.nonzero(near)
    g[rows, cols] = _direct_sum(n, k, rows + 1, cols + 1)
    return CorrelationKernel(n, k, g)


def magnetization(kern: CorrelationKernel, l: int) -> float:
    i = kern._site(l)
    return float(1.0 - kern.g[i, i])


def zz_corr(kern: CorrelationKernel, l: int, m: int) -> float:
    i, j = kern._site(l), kern._site(m)
    if i == j:
        raise DomainError("zz_corr needs two distinct sites")
    g = kern.g
    return float((1.0 - g[i, i]) * (1.0 - g[j, j]) - g[i, j] ** 2)


def string_matrix(g: np.ndarray, l: int, m: int) -> np.ndarray:
    """Block of ``g - 1`` with rows ``l..m-1`` and columns ``l+1..m``."""
    block = np.array(g[l - 1:m - 1, l:m], dtype=float)
    r = m - l
    idx = np.arange(1, r)
    block[idx, idx - 1] -= 1.0
    return block


def xx_corr(kern: CorrelationKernel, l: int, m: int) -> float:
    kern._site(l)
    kern._site(m)
    if not l < m:
        raise DomainError(f"xx_corr needs l < m, got l={l}, m={m}")
    if m == l + 1:
        return float(kern.g[l - 1, l])
    return lu_det(string_matrix(kern.g, l, m))


def pair_density(n: int, first: int, last: int, l: int, m: int) -> float:
    """Probability that sites l and m are both occupied by the Slater state of
    modes ``first..last``: the sum of squared 2x2 mode minors."""
    if last - first < 1:
        return 0.0
    s = sine_table(n, np.arange(first, last + 1), [l, m])
    minors = np.outer(s[0], s[1]) - np.outer(s[1], s[0])
    return float(0.5 * np.sum(minors * minors))


def two_spin_density(kern: CorrelationKernel, l: int, m: int) -> TwoSpinDensity:
    if l == m:
        raise DomainError("two_spin_density needs two distinct sites")
    zl, zm = magnetization(kern, l), magnetization(kern, m)
    zz = zz_corr(kern, l, m)
    xx = xx_corr(kern, min(l, m), max(l, m))
    dens = density_from_correlators(zl, zm, zz, xx)
    # flipped spins fill modes 1..k, upright spins modes k+1..n
    if dens.a_minus < POPULATION_REFINE:
        dens = replace(dens, a_minus=pair_density(kern.n, 1, kern.k, l, m))
    if dens.a_plus < POPULATION_REFINE:
        dens = replace(dens, a_plus=pair_density(kern.n, kern.k + 1, kern.n, l, m))
    return dens


def density_from_correlators(zl, zm, zz, xx) -> TwoSpinDensity:
    return TwoSpinDensity(
        a_plus=0.25 * (1.0 + zl + zm + zz),
        a_minus=0.25 * (1.0 - zl - zm + zz),
        b_plus=0.25 * (1.0 + zl - zm - zz),
        b_minus=0.25 * (1.0 - zl + zm - zz),
        e=0.5 * xx,
    )


def domain_wall_density(kern: CorrelationKernel) -> float:
    """Fraction of antiparallel nearest-neighbor bonds, (1 - <sz sz>) / 2 averaged."""
    n = kern.n
    if n < 2:
        raise DomainError("domain_wall_density needs at least two sites")
    walls = sum(0.5 * (1.0 - zz_corr(kern, l, l + 1)) for l in range(1, n))
    return walls / (n - 1)
