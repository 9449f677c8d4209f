"""Uniform asymptotics for the incomplete gamma functions at negative parameters.

The double-precision evaluators live in :mod:`negamma.expansion`; the
arbitrary-precision reference values in :mod:`negamma.oracle`.
"""
from .coefficients import CoefficientTable, build_table, default_table, eval_C, table_to_dict
from .errors import (
    DomainError,
    GenerationError,
    NegammaError,
    PrecisionError,
    QuadratureError,
    RangeOverflowError,
)
from .expansion import (
    EvalResult,
    Regime,
    exp_integral_p,
    gamma_lower_neg,
    gamma_neg_a,
    gamma_star_neg,
    gamma_upper_neg,
    gtilde,
    gtilde_many,
    p_ratio,
    p_uniform,
    q_ratio,
    q_uniform,
    s_series,
    t_series,
)
from .kernels import BACKEND
from .mapping import MappedPoint, eta_from_lambda, lambda_from_eta, map_point
from .special import ComplexValue, dawson, erfc, erfc_imag, gamma_star, ln_gamma

__version__ = "0.1.0"
