"""Time-splitting pseudo-spectral solvers for 1D dispersive/dissipative PDEs."""

from .errors import (
    BlowUpError,
    ConfigError,
    MaxStepsExceededError,
    NoConvergenceError,
    StepUnderflowError,
)
from .models import (
    CGLE3SolitonParams,
    ModelSpec,
    NLSESolitonParams,
    cgle3,
    cgle3_soliton,
    error_inf,
    fcgle5,
    fnlse3,
    fractional_laplacian,
    hamiltonian,
    linear_symbol,
    mass,
    matched_epsilon,
    nlse3,
    nlse3_soliton,
    nonlinear_flow,
    nonlinear_params,
    nonlinear_rhs,
    relative_invariant_error,
)
from .ode import RKConfig, rk853_fixed, rk853_integrate
from .propagators import (
    LinearFlow,
    LinearSymbol,
    NonlinearParams,
    build_a_matrix,
    cgle_cubic_step,
    linear_step,
    matrix_exponential,
    nlse_cubic_step,
    quintic_step_numeric,
)
from .schemes import (
    SCHEME_NAMES,
    AffineScheme,
    CompositionScheme,
    RunRecord,
    StepCounter,
    affine_step,
    builtin_schemes,
    composition_step,
    evolve,
    get_scheme,
    lie_trotter_minus,
    lie_trotter_plus,
    scheme_step,
    solve_affine_coefficients,
)
from .spectral import (
    Field,
    FourierBasis,
    HermiteBasis,
    dht_forward,
    dht_inverse,
    fourier_forward,
    fourier_inverse,
    fourier_wavenumbers,
    hermite_eval,
    hermite_eval_all,
    hermite_nodes_weights,
    two_thirds_mask,
)
from .stationary import (
    GroundStateProblem,
    default_initial_guess,
    ground_state_residual,
    solve_ground_state,
)

__version__ = "0.1.0"
