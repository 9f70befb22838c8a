"""Mittag-Leffler and Wright functions, fractional heat and Laguerre
polynomials, one-sided stable subordination and an exact fractional
diffusion solver for polynomial data."""

from .diffusion import DiffusionProblem, evolve, ffp_residual, mass_first_moments
from .errors import (
    CancellationLoss,
    DegreeTooLarge,
    DivergentParameter,
    DomainError,
    ExponentOutOfRange,
    MaxTermsExceeded,
    NonFiniteSample,
    NonPositiveArgument,
    NotConverged,
    PoleArgument,
    TailNotNegligible,
    VariableMismatch,
)
from .gamma import gamma, ln_gamma, recip_gamma
from .heat import (
    HeatPoly,
    appell_recurrence_x,
    appell_recurrence_y,
    expand_in_heat_basis,
    heat_gen_function_check,
    heat_poly,
    heat_poly_eval,
)
from .laguerre import (
    LaguerrePoly,
    laguerre_derivative,
    laguerre_eval,
    laguerre_gen_mlf_check,
    laguerre_gen_wright_check,
    laguerre_ode_residual,
    laguerre_poly,
)
from .levy import (
    LevyDensity,
    SubordinationKernel,
    levy_pdf,
    subordinate_function,
    subordinate_heat_poly,
    subordination_kernel,
)
from .mlf import (
    MlfParams,
    WrightParams,
    mlf,
    mlf_gaussian_deriv,
    mlf_gaussian_integral,
    wright,
    wright_deriv,
    wright_gaussian_integral,
)
from .quadrature import QuadratureSpec, QuadResult, integrate
from .series import BivariateSeries, EvalResult, GenPowerSeries, Residual

__version__ = "0.1.0"
