"""Single-spin partial-state fidelity on the crossing lattice.

Inside a region the ground state does not depend on B, so the fidelity
between two fields is 1 unless they straddle a crossing. The coarse-grained
version compares the single-spin states of adjacent regions ``k - 1`` and
``k`` and reports the result at ``B_k``. The susceptibility uses the crossing
spacing ``B_{k-1} - B_k`` as the field step, with ``B_0 = cos(0) = 1``.
"""

from dataclasses import dataclass
import math

from .errors import DomainError
from .kernel import kernel_entry
from .spectrum import crossing_fields

PROBABILITY_TOL = 1e-12


@dataclass(frozen=True)
class FidelityPoint:
    k: int
    b_k: float
    fid: float
    chi: float


def _probability(p, name):
    if not -PROBABILITY_TOL <= p <= 1.0 + PROBABILITY_TOL:
        raise DomainError(f"{name} must lie in [0, 1], got {p!r}")
    return min(max(p, 0.0), 1.0)


def single_spin_fidelity(p_up: float, q_up: float) -> float:
    """Fidelity of two diagonal qubit states (Bhattacharyya coefficient)."""
    p = _probability(p_up, "p_up")
    q = _probability(q_up, "q_up")
    return min(1.0, math.sqrt(p * q) + math.sqrt((1.0 - p) * (1.0 - q)))


def spin_up_probability(n: int, k: int, l: int) -> float:
    return 1.0 - 0.5 * kernel_entry(n, k, l, l)


def _check_crossing(n, k):
    if not 1 <= k <= n:
        raise DomainError(f"crossing index k must lie in [1, {n}], got {k}")


def coarse_fidelity(n: int, l: int, k: int) -> float:
    _check_crossing(n, k)
    before = spin_up_probability(n, k - 1, l)
    after = spin_up_probability(n, k, l)
    return single_spin_fidelity(before, after)


def crossing_spacing(n: int, k: int) -> float:
    _check_crossing(n, k)
    fields = crossing_fields(n)
    previous = 1.0 if k == 1 else fields[k - 2]
    return float(previous - fields[k - 1])


def susceptibility_from_fidelity(fid: float, step: float) -> float:
    if fid <= 0.0:
        return math.inf
    return max(0.0, -2.0 * math.log(fid) / step ** 2)


def fidelity_susceptibility(n: int, l: int, k: int) -> float:
    return susceptibility_from_fidelity(coarse_fidelity(n, l, k), crossing_spacing(n, k))


def fidelity_sweep(n: int, l: int) -> list:
    """Fidelity and susceptibility at every crossing, descending in B_k."""
    if not 1 <= l <= n:
        raise DomainError(f"site index must lie in [1, {n}], got {l}")
    fields = crossing_fields(n)
    probs = [spin_up_probability(n, k, l) for k in range(n + 1)]
    points = []
    for k in range(1, n + 1):
        fid = single_spin_fidelity(probs[k - 1], probs[k])
        chi = susceptibility_from_fidelity(fid, crossing_spacing(n, k))
        points.append(FidelityPoint(k=k, b_k=float(fields[k - 1]), fid=fid, chi=chi))
    return points
