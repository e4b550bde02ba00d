"""Regular summation of divergent series and generalized limits of sequences."""

from .engine import generalized_limit, symmetric_sum, verify_even_alternating_limit
from .oracles import (
    Method,
    RegularizedValue,
    abel_mean_limit,
    abel_sum,
    cesaro_sum,
    default_tolerance,
    euler_transform_sum,
)
from .sequences import (
    AlternatingPolynomial,
    AlternatingTrigPoly,
    EvenElementary,
    Explicit,
    SequenceSpec,
    Shifted,
    Telescoped,
)
from .telescopers import (
    TrigTelescoper,
    alternating_series_value,
    find_alternating_telescoper,
    find_trig_telescoper,
    trig_series_value,
)

__all__ = [
    "AlternatingPolynomial",
    "AlternatingTrigPoly",
    "EvenElementary",
    "Explicit",
    "Method",
    "RegularizedValue",
    "SequenceSpec",
    "Shifted",
    "Telescoped",
    "TrigTelescoper",
    "abel_mean_limit",
    "abel_sum",
    "alternating_series_value",
    "cesaro_sum",
    "default_tolerance",
    "euler_transform_sum",
    "find_alternating_telescoper",
    "find_trig_telescoper",
    "generalized_limit",
    "symmetric_sum",
    "trig_series_value",
    "verify_even_alternating_limit",
]
