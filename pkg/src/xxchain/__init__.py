"""Exact ground-state toolkit for the open spin-1/2 XX chain in a transverse field."""

from .errors import DomainError, InvalidStateError, ResourceLimitError
from .spectrum import (
    ChainSpec,
    GroundStateData,
    crossing_fields,
    ground_energy,
    ground_energy_at,
    ground_state,
    mode_energy,
    region_index,
    sine_amplitude,
)
from .kernel import (
    CorrelationKernel,
    TwoSpinDensity,
    domain_wall_density,
    kernel_entry,
    kernel_matrix,
    magnetization,
    two_spin_density,
    xx_corr,
    zz_corr,
)
from .pairstate import (
    EntanglementPoint,
    concurrence,
    entanglement_range,
    measure_sweep,
    one_tangle,
    pair_concurrence,
)
from .fidelity import (
    FidelityPoint,
    coarse_fidelity,
    fidelity_susceptibility,
    fidelity_sweep,
    single_spin_fidelity,
)
from .thermo import (
    BulkParams,
    bulk_concurrence,
    bulk_kernel,
    bulk_magnetization,
    bulk_xx,
    bulk_xx_product_b0,
    bulk_zz,
    energy_per_spin,
    k_fraction,
    xx_asymptote,
)

__version__ = "0.1.0"
