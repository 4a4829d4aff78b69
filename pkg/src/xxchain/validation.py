"""Analytic-versus-oracle comparison over every region of small chains."""

from dataclasses import dataclass

from . import oracle
from .errors import DomainError
from .fidelity import coarse_fidelity
from .kernel import kernel_matrix, magnetization, two_spin_density, xx_corr, zz_corr
from .pairstate import concurrence, one_tangle
from .spectrum import ChainSpec, region_index, region_samples

TOLERANCE = 1e-10
CHECKS = ("residual", "z", "zz", "xx", "tangle", "concurrence", "fidelity")


@dataclass
class ChainReport:
    n: int
    cases: int
    errors: dict

    @property
    def passed(self) -> bool:
        return all(err < TOLERANCE for err in self.errors.values())


def check_chain(n: int, cases_per_region: int = 3) -> ChainReport:
    """Largest absolute deviation per observable for an ``n``-site chain.

    Every region gets ``cases_per_region`` fields; each field is rebuilt
    through the oracle and compared site by site and pair by pair.
    """
    errors = dict.fromkeys(CHECKS, 0.0)

    def note(name, a, b):
        errors[name] = max(errors[name], abs(a - b))

    factors = {}
    cases = 0
    for k in range(n + 1):
        kern = kernel_matrix(n, k)
        for b in region_samples(n, k, cases_per_region):
            if region_index(ChainSpec(n, b)) != k:
                raise AssertionError(f"sample field {b} left region {k} for n={n}")
            cases += 1
            errors["residual"] = max(errors["residual"], oracle.ground_residual(n, b))
            psi = oracle.build_state(n, b)
            for l in range(1, n + 1):
                z = oracle.oracle_corr(psi, "z", (l,))
                note("z", magnetization(kern, l), z)
                note("tangle", one_tangle(kern, l), 1.0 - z * z)
                factors[k, l] = oracle.reduced_factor(psi, (l,))
                for m in range(l + 1, n + 1):
                    note("zz", zz_corr(kern, l, m), oracle.oracle_corr(psi, "zz", (l, m)))
                    note("xx", xx_corr(kern, l, m), oracle.oracle_corr(psi, "xx", (l, m)))
                    pair = oracle.reduced_factor(psi, (l, m))
                    note("concurrence", concurrence(two_spin_density(kern, l, m)),
                         oracle.wootters_concurrence(pair))
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            note("fidelity", coarse_fidelity(n, l, k),
                 oracle.matrix_fidelity(factors[k - 1, l], factors[k, l]))
    return ChainReport(n=n, cases=cases, errors=errors)


def validate(n_max: int = 10, cases_per_region: int = 3, n_min: int = 2) -> list:
    if not 1 <= n_min <= n_max <= oracle.MAX_SITES:
        raise DomainError(f"need 1 <= n_min <= n_max <= {oracle.MAX_SITES}, got {n_min}..{n_max}")
    if cases_per_region < 1:
        raise DomainError(f"cases_per_region must be at least 1, got {cases_per_region}")
    return [check_chain(n, cases_per_region) for n in range(n_min, n_max + 1)]
