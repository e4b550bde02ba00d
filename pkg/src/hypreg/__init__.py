"""Exact hypergeometric endpoint analysis and regularized summation of divergent series."""

from . import binomial_endpoint, exactnum, hyperseries, sumreg, zline
from .binomial_endpoint import RemainderQuery, endpoint_value, remainder, remainder_poly_in_k
from .exactnum import ExactRational, Polynomial, as_rational, generalized_binomial, pochhammer
from .hyperseries import ConvergenceVerdict, HypergeometricParams, Verdict, classify_endpoint, classify_point
from .sumreg import RegularizedValue, abel_sum, generalized_limit
from .zline import GeneratingFunction, precedes, resolve_range, sum_over_range

__version__ = "0.1.0"

__all__ = [
    "ConvergenceVerdict",
    "ExactRational",
    "GeneratingFunction",
    "HypergeometricParams",
    "Polynomial",
    "RegularizedValue",
    "RemainderQuery",
    "Verdict",
    "abel_sum",
    "as_rational",
    "binomial_endpoint",
    "classify_endpoint",
    "classify_point",
    "endpoint_value",
    "exactnum",
    "generalized_binomial",
    "generalized_limit",
    "hyperseries",
    "pochhammer",
    "precedes",
    "remainder",
    "remainder_poly_in_k",
    "resolve_range",
    "sum_over_range",
    "sumreg",
    "zline",
]
