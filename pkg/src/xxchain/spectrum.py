"""Free-fermion spectrum of the open XX chain in a transverse field.

The chain ``H = -[sum_i (sx_i sx_{i+1} + sy_i sy_{i+1}) / 2 + B sz_i]`` maps to
free fermions with sine standing-wave modes. Mode ``k`` has single-particle
energy ``-2B + 2 cos(pi k / (N + 1))`` and changes sign at the crossing field
``B_k = cos(pi k / (N + 1))``. Below ``B_k`` the ground state has the first
``k`` modes emptied, i.e. ``k`` flipped spins.

Degeneracy convention: at exactly ``B = B_k`` the region index counts only
crossings with ``B_k > B`` (strict), so the higher-field state is reported.
No tolerance band is applied around crossings.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError

# Fields outside the band used to close the first and last region when a
# representative point (midpoint, sample grid) is needed.
FIELD_ABOVE_BAND = 1.1
FIELD_BELOW_BAND = -1.1


@dataclass(frozen=True)
class ChainSpec:
    n: int
    b: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"chain length n must be a positive integer, got {self.n!r}")
        if not math.isfinite(self.b):
            raise DomainError(f"field b must be finite, got {self.b!r}")


@dataclass(frozen=True)
class GroundStateData:
    n: int
    k: int
    occupation: tuple


def _check_n(n):
    if int(n) != n or n < 1:
        raise DomainError(f"chain length n must be a positive integer, got {n!r}")
    return int(n)


def _sin_pi_ratio(j, n):
    """sin(pi * j / (n + 1)) for integer j, exactly zero on the nodes."""
    period = 2 * (n + 1)
    j = np.mod(np.asarray(j, dtype=np.int64), period)
    out = np.sin(np.pi * j / (n + 1))
    return np.where(j % (n + 1) == 0, 0.0, out)


def sine_table(n, modes, sites):
    """Mode amplitudes ``S[site, mode]`` for arrays of 1-based indices."""
    sites = np.asarray(sites, dtype=np.int64)
    modes = np.asarray(modes, dtype=np.int64)
    return math.sqrt(2.0 / (n + 1)) * _sin_pi_ratio(np.multiply.outer(sites, modes), n)


def sine_amplitude(n: int, k: int, l: int) -> float:
    """Amplitude of mode ``k`` on site ``l``; ``k = n + 1`` is the null mode."""
    n = _check_n(n)
    if not 1 <= k <= n + 1:
        raise DomainError(f"mode index k must lie in [1, {n + 1}], got {k}")
    if not 1 <= l <= n:
        raise DomainError(f"site index l must lie in [1, {n}], got {l}")
    return float(math.sqrt(2.0 / (n + 1)) * _sin_pi_ratio(k * l, n))


def crossing_fields(n: int) -> np.ndarray:
    """Crossing fields ``[B_1, ..., B_N]``, strictly decreasing.

    Evaluated as ``sin(pi (N + 1 - 2k) / (2 (N + 1)))`` so that the middle
    crossing of an odd chain is exactly 0 and ``B_k = -B_{N+1-k}`` holds
    bit for bit.
    """
    n = _check_n(n)
    k = np.arange(1, n + 1)
    return np.sin(np.pi * (n + 1 - 2 * k) / (2 * (n + 1)))


def mode_energy(spec: ChainSpec, k: int) -> float:
    if not 1 <= k <= spec.n:
        raise DomainError(f"mode index k must lie in [1, {spec.n}], got {k}")
    return float(-2.0 * spec.b + 2.0 * crossing_fields(spec.n)[k - 1])


def region_index(spec: ChainSpec) -> int:
    """Number of crossing fields strictly above ``spec.b``."""
    return int(np.count_nonzero(crossing_fields(spec.n) > spec.b))


def ground_state(spec: ChainSpec) -> GroundStateData:
    k = region_index(spec)
    occupation = tuple(m > k for m in range(1, spec.n + 1))
    return GroundStateData(n=spec.n, k=k, occupation=occupation)


def _energy_table(spec):
    # eps[j] = -(N - 2j) B - 2 sum_{l<=j} B_l for j = 0..N
    partial = np.concatenate(([0.0], np.cumsum(crossing_fields(spec.n))))
    j = np.arange(spec.n + 1)
    return -(spec.n - 2 * j) * spec.b - 2.0 * partial


def ground_energy_at(spec: ChainSpec, k: int) -> float:
    """Energy of the state with the lowest ``k`` modes emptied."""
    if not 0 <= k <= spec.n:
        raise DomainError(f"region index k must lie in [0, {spec.n}], got {k}")
    return float(_energy_table(spec)[k])


def ground_energy(spec: ChainSpec) -> float:
    return float(_energy_table(spec)[region_index(spec)])


def region_bounds(n: int, k: int):
    """Open field interval ``(lower, upper)`` of region ``k``.

    The outer regions are closed off at ``FIELD_BELOW_BAND`` and
    ``FIELD_ABOVE_BAND``.
    """
    n = _check_n(n)
    if not 0 <= k <= n:
        raise DomainError(f"region index k must lie in [0, {n}], got {k}")
    fields = crossing_fields(n)
    upper = FIELD_ABOVE_BAND if k == 0 else float(fields[k - 1])
    lower = FIELD_BELOW_BAND if k == n else float(fields[k])
    return lower, upper


def region_midpoint(n: int, k: int) -> float:
    lower, upper = region_bounds(n, k)
    return 0.5 * (lower + upper)


def region_samples(n: int, k: int, count: int) -> list:
    """``count`` fields evenly spaced strictly inside region ``k``."""
    if count < 1:
        raise DomainError(f"sample count must be at least 1, got {count}")
    lower, upper = region_bounds(n, k)
    return [lower + (upper - lower) * (i + 1) / (count + 1) for i in range(count)]
