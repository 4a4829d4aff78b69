"""One-tangle, concurrence and entanglement-range scans at finite size."""

from dataclasses import dataclass
import math

from .errors import DomainError, InvalidStateError
from .kernel import (
    CorrelationKernel,
    TwoSpinDensity,
    kernel_matrix,
    magnetization,
    two_spin_density,
)
from .spectrum import region_midpoint

# Populations this far below zero are rounding, not unphysical states.
NEGATIVE_POPULATION_TOL = 1e-12


@dataclass(frozen=True)
class EntanglementPoint:
    b: float
    k: int
    sites: tuple
    value: float


def one_tangle(kern: CorrelationKernel, l: int) -> float:
    z = magnetization(kern, l)
    return 1.0 - z * z


def _population(x, name):
    if x < -NEGATIVE_POPULATION_TOL:
        raise InvalidStateError(f"{name} = {x!r} is negative beyond rounding")
    return max(x, 0.0)


def concurrence(dens: TwoSpinDensity) -> float:
    """Wootters concurrence of an X-shaped two-qubit state with real coherence."""
    a_plus = _population(dens.a_plus, "a_plus")
    a_minus = _population(dens.a_minus, "a_minus")
    _population(dens.b_plus, "b_plus")
    _population(dens.b_minus, "b_minus")
    return 2.0 * max(0.0, abs(dens.e) - math.sqrt(a_plus * a_minus))


def pair_concurrence(kern: CorrelationKernel, l: int, m: int) -> float:
    return concurrence(two_spin_density(kern, l, m))


def entanglement_range(n: int, k: int, l: int, threshold: float) -> int:
    """Largest distance r with C(l, l + r) above ``threshold``; 0 if none."""
    if threshold <= 0:
        raise DomainError(f"threshold must be positive, got {threshold}")
    if not 1 <= l or l + 1 > n:
        raise DomainError(f"reference site l must satisfy 1 <= l and l + 1 <= n = {n}, got {l}")
    kern = kernel_matrix(n, k)
    reach = 0
    for r in range(1, n - l + 1):
        if pair_concurrence(kern, l, l + r) > threshold:
            reach = r
    return reach


def measure_sweep(n: int, l: int, m: int = None, measure: str = "tangle") -> list:
    """One point per region k = 0..n, evaluated at the region midpoint.

    ``measure`` is ``"tangle"`` (site ``l``) or ``"concurrence"`` (pair
    ``l, m``; ``m`` defaults to ``l + 1``).
    """
    if measure == "tangle":
        sites = (l,)
    elif measure == "concurrence":
        sites = (l, l + 1 if m is None else m)
    else:
        raise DomainError(f"measure must be 'tangle' or 'concurrence', got {measure!r}")
    for site in sites:
        if not 1 <= site <= n:
            raise DomainError(f"site index must lie in [1, {n}], got {site}")
    points = []
    for k in range(n + 1):
        kern = kernel_matrix(n, k)
        if measure == "tangle":
            value = one_tangle(kern, l)
        else:
            value = pair_concurrence(kern, *sites)
        points.append(EntanglementPoint(b=region_midpoint(n, k), k=k, sites=sites, value=value))
    return points
