"""Brute-force 2^N state vectors for cross-checking the analytic results.

Basis convention: index ``i`` of a state vector encodes the spin
configuration with site 1 as the most significant bit; bit value 1 means the
spin is flipped down. So for N = 2 the order is (uu, ud, du, dd).

Ground states are built from Slater determinants of sine modes over every
placement of the ``k`` flipped spins and certified by the residual of
``H psi - E psi``. No eigensolver is involved.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DomainError, ResourceLimitError
from .spectrum import ChainSpec, ground_energy, region_index, sine_table

MAX_SITES = 14


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.amplitudes.setflags(write=False)


def _check_size(n):
    if int(n) != n or n < 1:
        raise DomainError(f"chain length n must be a positive integer, got {n!r}")
    if n > MAX_SITES:
        raise ResourceLimitError(f"oracle is capped at n <= {MAX_SITES}, got {n}")
    return int(n)


def _bit(n, l):
    return 1 << (n - l)


def config_index(n, sites):
    """Basis index of the configuration with the given sites flipped down."""
    return sum(_bit(n, l) for l in sites)


def _down(n, l, idx):
    return (idx >> (n - l)) & 1


def slater_amplitude(n: int, k: int, sites) -> float:
    sites = tuple(sites)
    if len(sites) != k:
        raise DomainError(f"expected {k} sites, got {len(sites)}")
    if any(b <= a for a, b in zip(sites, sites[1:])):
        raise DomainError(f"sites must be strictly increasing, got {sites}")
    if k == 0:
        return 1.0
    if sites[0] < 1 or sites[-1] > n:
        raise DomainError(f"sites must lie in [1, {n}], got {sites}")
    return float(np.linalg.det(sine_table(n, np.arange(1, k + 1), sites)))


def _fix_phase(amps):
    nonzero = np.flatnonzero(amps)
    if nonzero.size and amps[nonzero[0]] < 0:
        amps = -amps
    return amps


def slater_state(n: int, k: int) -> StateVector:
    """Normalized state with ``k`` flipped spins in the lowest ``k`` modes."""
    n = _check_size(n)
    if not 0 <= k <= n:
        raise DomainError(f"region index k must lie in [0, {n}], got {k}")
    amps = np.zeros(2 ** n)
    placements = list(combinations(range(1, n + 1), k))
    if k == 0:
        amps[0] = 1.0
    else:
        sites = np.array(placements)
        mats = sine_table(n, np.arange(1, k + 1), sites)
        index = (1 << (n - sites)).sum(axis=1)
        amps[index] = np.linalg.det(mats)
    amps /= np.linalg.norm(amps)
    return StateVector(n, _fix_phase(amps))


def build_state(n: int, b: float) -> StateVector:
    _check_size(n)
    return slater_state(n, region_index(ChainSpec(n, b)))


def apply_hamiltonian(n: int, b: float, psi) -> np.ndarray:
    amps = psi.amplitudes if isinstance(psi, StateVector) else np.asarray(psi, dtype=float)
    n = _check_size(n)
    if amps.shape != (2 ** n,):
        raise DomainError(f"state must have length {2 ** n}, got {amps.shape}")
    idx = np.arange(2 ** n)
    downs = np.zeros(2 ** n, dtype=np.int64)
    for l in range(1, n + 1):
        downs += _down(n, l, idx)
    out = -b * (n - 2 * downs) * amps
    for l in range(1, n):
        hop = _down(n, l, idx) != _down(n, l + 1, idx)
        mask = _bit(n, l) | _bit(n, l + 1)
        out[idx[hop] ^ mask] -= amps[hop]
    return out


def ground_residual(n: int, b: float) -> float:
    psi = build_state(n, b)
    energy = ground_energy(ChainSpec(n, b))
    return float(np.linalg.norm(apply_hamiltonian(n, b, psi) - energy * psi.amplitudes))


def _site_block(psi, sites):
    sites = tuple(sites)
    if len(set(sites)) != len(sites) or not 1 <= len(sites) <= 2:
        raise DomainError(f"need one or two distinct sites, got {sites}")
    if any(not 1 <= s <= psi.n for s in sites):
        raise DomainError(f"sites must lie in [1, {psi.n}], got {sites}")
    tensor = psi.amplitudes.reshape((2,) * psi.n)
    tensor = np.moveaxis(tensor, [s - 1 for s in sites], range(len(sites)))
    return tensor.reshape(2 ** len(sites), -1)


def reduced_density(psi: StateVector, sites) -> np.ndarray:
    """Partial trace onto one or two sites, basis ordered as the full state."""
    block = _site_block(psi, sites)
    return block @ block.T


def reduced_factor(psi: StateVector, sites) -> np.ndarray:
    """Square factor ``R`` with ``reduced_density(psi, sites) == R.T @ R``.

    Taken from a QR factorization of the amplitude block, so no square root
    of a nearly singular density matrix is ever formed.
    """
    block = _site_block(psi, sites)
    d = block.shape[0]
    if block.shape[1] < d:
        block = np.hstack([block, np.zeros((d, d - block.shape[1]))])
    return np.linalg.qr(block.T, mode="r")


def oracle_corr(psi: StateVector, kind: str, sites) -> float:
    n = psi.n
    amps = psi.amplitudes
    idx = np.arange(2 ** n)
    sites = tuple(sites)
    if kind == "z":
        (l,) = sites
        return float(amps ** 2 @ (1 - 2 * _down(n, l, idx)))
    if kind == "zz":
        l, m = sites
        sign = (1 - 2 * _down(n, l, idx)) * (1 - 2 * _down(n, m, idx))
        return float(amps ** 2 @ sign)
    if kind == "xx":
        l, m = sites
        return float(amps @ amps[idx ^ _bit(n, l) ^ _bit(n, m)])
    raise DomainError(f"kind must be 'z', 'zz' or 'xx', got {kind!r}")


def sequential_state(n: int, k: int) -> np.ndarray:
    """Apply ``sum_l S_l^q (prod_{m<l} sz_m) s-_l`` for q = k, ..., 1 to all-up.

    Unnormalized; used to confirm the determinant amplitudes independently.
    """
    n = _check_size(n)
    idx = np.arange(2 ** n)
    amps = np.zeros(2 ** n)
    amps[0] = 1.0
    for q in range(k, 0, -1):
        new = np.zeros_like(amps)
        string = np.ones(2 ** n)
        for l in range(1, n + 1):
            coeff = sine_table(n, [q], [l])[0, 0]
            up = _down(n, l, idx) == 0
            new[idx[up] | _bit(n, l)] += coeff * string[up] * amps[up]
            string *= 1 - 2 * _down(n, l, idx)
        amps = new
    return amps


_SPIN_FLIP = np.fliplr(np.diag([-1.0, 1.0, 1.0, -1.0]))  # sy (x) sy, real


def wootters_concurrence(factor) -> float:
    """General two-qubit concurrence of ``rho = factor.T @ factor`` (real).

    The Wootters values sqrt(eig(rho rho~)) are the singular values of
    ``factor @ Y @ factor.T`` with ``Y = sy (x) sy``.
    """
    lam = np.linalg.svd(factor @ _SPIN_FLIP @ factor.T, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1:].sum()))


def matrix_fidelity(factor_a, factor_b) -> float:
    """Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)) from square factors."""
    return float(np.linalg.svd(factor_a @ factor_b.T, compute_uv=False).sum())
