"""Excited coherent states of the harmonic oscillator.

Thin Python layer over the C++ core: closed-form wave functions and
moments, a truncated Fock-space reference computation, quadrature
utilities and the three-route cross-validation suite.
"""

from ._core import (
    CheckResult,
    ConstantsMode,
    ConvergenceError,
    DomainError,
    ECSParams,
    GaussHermiteRule,
    GridSpec,
    MomentConstants,
    MomentReport,
    OrderError,
    OscillatorConfig,
    PhaseError,
    QuadMethod,
    QuadratureSpec,
    SeriesResult,
    TruncatedState,
    TruncationError,
    VerifyOptions,
    all_pass,
    build_coherent,
    build_ecs,
    constants_residual,
    default_dim,
    default_quadrature_spec,
    delta_p,
    delta_x,
    density_m1,
    ecs_norm_poly,
    evolve,
    gauss_hermite,
    hermite,
    hermite_complex,
    integrate_density,
    is_squeezed,
    mean_n,
    mean_x,
    min_width_ratio,
    moment_constants,
    moment_p,
    moment_x,
    node_count_for_span,
    psi_coherent,
    psi_ecs,
    psi_ecs_t,
    psi_fock,
    run_verification,
    shifted_hermite_closed,
    shifted_hermite_sum,
    squeeze_ratio_bounds,
    synthesize,
    uncertainty_product,
    width_series,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
