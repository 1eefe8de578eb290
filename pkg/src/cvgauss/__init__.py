"""Phase-space simulation of n-mode Gaussian quantum states.

Quadratures are ordered ``(x_1, p_1, ..., x_n, p_n)`` with ``hbar = 1`` and
vacuum variance ``1/2``. Mode indices are 0-based.
"""

from .core import (
    CONVENTION,
    DimensionError,
    GaussianError,
    GaussianState,
    PhysicalityError,
    SymplecticError,
    SymplecticOp,
    is_pure,
    omega,
    purity,
    validate_physical,
    validate_symplectic,
)
from .fidelity import (
    FidelityError,
    FidelityIntermediates,
    fidelity,
    fidelity_general,
    fidelity_intermediates,
    fidelity_path,
    fidelity_pure,
    fidelity_single_mode,
)
from .measurement import (
    DegenerateMeasurementError,
    HomodyneResult,
    MeasurementBlocks,
    homodyne_condition,
    homodyne_distribution,
    measurement_blocks,
    partial_trace,
    sample_homodyne,
    sample_outcomes,
)
from .phasespace import (
    characteristic,
    gaussian_integral_1d,
    gaussian_integral_nd,
    overlap,
    wigner,
    wigner_grid,
)
from .states import (
    coherent,
    nbar_from_temperature,
    squeezed_vacuum,
    tensor,
    thermal,
    two_mode_squeezed_vacuum,
    vacuum,
)
from .unitaries import (
    ModeSelector,
    apply,
    apply_on,
    beamsplitter,
    compose,
    displacement,
    embed,
    inverse,
    phase_shift,
    rotation_matrix,
    squeeze,
    two_mode_squeeze,
)

__version__ = "0.1.0"
