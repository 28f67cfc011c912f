"""Bound states of the D-dimensional Hulthen potential.

Closed-form energy levels and radial wavefunctions from the improved
quantization rule with the exponential centrifugal approximation, plus
independent numerical oracles (adaptive quadrature and a finite-difference
tridiagonal eigensolver) that validate every closed form.
"""

__version__ = "0.1.0"

from .errors import (
    CentrifugalFreeError,
    ConvergenceFailure,
    GridTooCoarseError,
    HulthenError,
    InvalidCError,
    NoBoundStateError,
    NoClassicalRegionError,
    NodeProximityError,
    NoRootError,
    NotBoundError,
    OutOfRangeError,
    ParameterPoleError,
    QuadratureFailure,
    ValidityWarning,
)
from .model import (
    DerivedParams,
    PhysicalParams,
    QuantumNumbers,
    centrifugal_approx,
    derive_params,
    effective_V,
    hulthen_V,
    screened_z,
)
from .spectrum import (
    EnergyLevel,
    count_bound_states,
    critical_alpha,
    degeneracy_partner,
    energy_level,
    energy_value,
    epsilon_tilde,
)
from .qrule import (
    GroundLogDeriv,
    TurningPoints,
    appendix_integral,
    ground_phi,
    inverse_z,
    momentum_integral,
    momentum_k,
    quantization_residual,
    quantum_correction,
    solve_quantization,
    transform_z,
    turning_points,
)
from .wavefn import (
    RadialWavefunction,
    count_nodes,
    hyp2f1_truncated,
    jacobi_P,
    normalization_closed,
    normalization_numeric,
    pochhammer,
    radial_R,
    radial_wavefunction,
    riccati_residual,
)
from .oracle import (
    Grid,
    OracleLevel,
    TridiagHamiltonian,
    adaptive_quad,
    assemble,
    lowest_eigenvalues,
    solve_bound_states,
)
from .verify import run_verification
