"""Thermodynamic-limit (N -> infinity) closed forms for bulk spins.

Inside the band |B| <= 1 the filled Fermi sea reaches the wavenumber
``omega = arccos(B)``. The bulk kernel is ``g(r) = (2/pi) sin(omega r) / r``
(``g(0) = 2 omega / pi``), and the bulk xx correlator is the Toeplitz limit
of the finite-size string determinant.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError, ResourceLimitError
from .kernel import density_from_correlators, string_matrix
from .linalg import lu_det
from .pairstate import concurrence

# Amplitude of the bulk r^(-1/2) law for <sx_l sx_{l+r}>.
ASYMPTOTE_AMPLITUDE = 0.6450025
MAX_TOEPLITZ_ORDER = 500


@dataclass(frozen=True)
class BulkParams:
    b: float
    omega: float

    @classmethod
    def from_field(cls, b: float) -> "BulkParams":
        if not -1.0 <= b <= 1.0:
            raise DomainError(f"bulk field must lie in [-1, 1], got {b!r}")
        return cls(b=float(b), omega=math.acos(b))


def _params(p):
    return p if isinstance(p, BulkParams) else BulkParams.from_field(p)


def _check_distance(r, lowest=1):
    if int(r) != r or r < lowest:
        raise DomainError(f"distance r must be an integer >= {lowest}, got {r!r}")
    return int(r)


def energy_per_spin(b: float) -> float:
    if not math.isfinite(b):
        raise DomainError(f"field b must be finite, got {b!r}")
    if abs(b) > 1.0:
        return -abs(b)
    return (2.0 / math.pi) * (b * (math.acos(b) - math.pi / 2) - math.sqrt(1.0 - b * b))


def energy_slope(b: float) -> float:
    """d(energy_per_spin)/dB, equal to minus the bulk magnetization."""
    return -bulk_magnetization(b)


def bulk_kernel(params, r: int) -> float:
    p = _params(params)
    r = _check_distance(r, lowest=0)
    if r == 0:
        return 2.0 * p.omega / math.pi
    return (2.0 / math.pi) * math.sin(p.omega * r) / r


def bulk_magnetization(b: float) -> float:
    if abs(b) > 1.0:
        return math.copysign(1.0, b)
    return 1.0 - 2.0 * math.acos(b) / math.pi


def bulk_zz(params, r: int) -> float:
    p = _params(params)
    r = _check_distance(r)
    return bulk_magnetization(p.b) ** 2 - bulk_kernel(p, r) ** 2


def bulk_kernel_matrix(params, size: int) -> np.ndarray:
    """Toeplitz matrix ``g(|i - j|)`` of the bulk kernel, ``size`` x ``size``."""
    p = _params(params)
    symbol = np.array([bulk_kernel(p, d) for d in range(size)])
    idx = np.arange(size)
    return symbol[np.abs(np.subtract.outer(idx, idx))]


def bulk_xx(params, r: int) -> float:
    p = _params(params)
    r = _check_distance(r)
    if r > MAX_TOEPLITZ_ORDER:
        raise ResourceLimitError(f"Toeplitz order r={r} exceeds the cap {MAX_TOEPLITZ_ORDER}")
    g = bulk_kernel_matrix(p, r + 1)
    if r == 1:
        return float(g[0, 1])
    return lu_det(string_matrix(g, 1, r + 1))


def bulk_xx_product_b0(r: int) -> float:
    """Closed-form bulk xx correlator at B = 0."""
    r = _check_distance(r)
    upper = r // 2 + 1
    value = (2.0 / math.pi) ** r
    for j in range(1, upper):
        value *= (4.0 * j * j / (4.0 * j * j - 1.0)) ** (r - 2 * j)
    return value


def xx_asymptote(r: int) -> float:
    r = _check_distance(r)
    return math.sqrt(2.0) * ASYMPTOTE_AMPLITUDE ** 2 / math.sqrt(r)


def bulk_concurrence(params, r: int) -> float:
    p = _params(params)
    z = bulk_magnetization(p.b)
    dens = density_from_correlators(z, z, bulk_zz(p, r), bulk_xx(p, r))
    return concurrence(dens)


def k_fraction(b: float) -> float:
    """Fraction of flipped spins, k / (N + 1) -> arccos(B) / pi."""
    if not -1.0 <= b <= 1.0:
        raise DomainError(f"k_fraction needs |b| <= 1, got {b!r}")
    return math.acos(b) / math.pi
