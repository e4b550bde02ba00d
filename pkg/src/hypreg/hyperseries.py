"""Generalized hypergeometric series pFq: terms, partial sums, convergence.

Parameters are exact rationals, so the endpoint test quantity
``s = sum(lower) - sum(upper)`` is compared against 0 and -1 exactly and no
boundary case is ever decided by rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import TerminatingSeriesError, UndefinedTermError
from .exactnum import RationalLike, as_rational, format_rational

__all__ = [
    "ConvergenceVerdict",
    "HypergeometricParams",
    "Radius",
    "Verdict",
    "classify_endpoint",
    "classify_point",
    "classify_radius",
    "partial_sum",
    "term_coefficient",
]


class Verdict(str, enum.Enum):
    ABSOLUTELY_CONVERGENT = "AbsolutelyConvergent"
    CONDITIONALLY_CONVERGENT = "ConditionallyConvergent"
    DIVERGENT = "Divergent"


class Radius(str, enum.Enum):
    ALL_X = "ConvergesAllX"
    UNIT_DISK = "ConvergesUnitDisk"
    ONLY_AT_ZERO = "ConvergesOnlyAtZero"


# Rule-branch tags attached to every verdict.
ABSOLUTE = "s>0:absolute"
CONDITIONAL = "-1<s<=0,x=-1:conditional"
DIVERGENT = "s<=-1:divergent"
HARMONIC_COMPARISON = "-1<s<=0,x=+1:harmonic-comparison"
TERMINATING = "terminating:finite-sum"
INSIDE_DISK = "|x|<1:ratio-test"
OUTSIDE_DISK = "|x|>1:ratio-test"
ENTIRE = "p<=q:entire"
ZERO_RADIUS = "p>q+1:zero-radius"


def _nonpositive_integer(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


@dataclass(frozen=True)
class HypergeometricParams:
    """Upper parameters a_1..a_p and lower parameters b_1..b_q."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __init__(self, upper: Iterable[RationalLike], lower: Iterable[RationalLike]):
        object.__setattr__(self, "upper", tuple(as_rational(a) for a in upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in lower))
        stop = self.termination_index()
        for b in self.lower:
            if _nonpositive_integer(b):
                # (b)_n first vanishes at n = 1 - b; it must come after the
                # numerator has already gone to zero at n = 1 - a.
                if stop is None or stop >= 1 - b:
                    raise UndefinedTermError(
                        f"lower parameter {format_rational(b)} makes a denominator vanish "
                        "before the series terminates"
                    )

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def termination_index(self) -> int | None:
        """First n with (a_i)_n = 0 for some upper a_i, or None for an infinite series."""
        hits = [1 - int(a) for a in self.upper if _nonpositive_integer(a)]
        return min(hits) if hits else None

    @property
    def terminates(self) -> bool:
        return self.termination_index() is not None

    @property
    def excess(self) -> Fraction:
        """s = sum(lower) - sum(upper)."""
        return sum(self.lower, Fraction(0)) - sum(self.upper, Fraction(0))

    def cancel(self) -> "HypergeometricParams":
        """Drop upper/lower pairs that are equal, e.g. 2F1(a, b; b) -> 1F0(a)."""
        upper = list(self.upper)
        lower = []
        for b in self.lower:
            if b in upper:
                upper.remove(b)
            else:
                lower.append(b)
        return HypergeometricParams(upper, lower)


def _ratio(params: HypergeometricParams, n: int) -> Fraction:
    """c_{n+1} / c_n for the term coefficients c_n."""
    num = Fraction(1)
    for a in params.upper:
        num *= a + n
    den = Fraction(n + 1)
    for b in params.lower:
        den *= b + n
    if den == 0:
        raise UndefinedTermError(f"lower Pochhammer factor vanishes at index {n + 1}")
    return num / den


def _coefficients(params: HypergeometricParams, upto: int):
    stop = params.termination_index()
    c = Fraction(1)
    yield c
    for n in range(upto):
        if stop is not None and n + 1 >= stop:
            c = Fraction(0)
        else:
            c *= _ratio(params, n)
        yield c


def term_coefficient(params: HypergeometricParams, n: int) -> Fraction:
    """prod (a_i)_n / (prod (b_j)_n * n!)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = Fraction(1)
    for c in _coefficients(params, n):
        pass
    return c


def partial_sum(params: HypergeometricParams, x: RationalLike, N: int) -> Fraction:
    """Exact sum of the first N + 1 terms at the point x."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    x = as_rational(x)
    total = Fraction(0)
    power = Fraction(1)
    for c in _coefficients(params, N):
        total += c * power
        power *= x
    return total


def classify_radius(p: int, q: int) -> Radius:
    if p < 0 or q < 0:
        raise ValueError("parameter counts must be nonnegative")
    if p <= q:
        return Radius.ALL_X
    if p == q + 1:
        return Radius.UNIT_DISK
    return Radius.ONLY_AT_ZERO


@dataclass(frozen=True)
class ConvergenceVerdict:
    verdict: Verdict
    rationale: str
    s: Fraction | None = None


def classify_endpoint(params: HypergeometricParams, x: RationalLike) -> ConvergenceVerdict:
    """Convergence of a (q+1)Fq series at x = +1 or x = -1.

    s > 0 converges absolutely; s <= -1 diverges; in between the series
    converges conditionally at x = -1.  At x = +1 with -1 < s <= 0 the terms
    behave like n^(-1-s), which is no better than the harmonic series, so the
    verdict there is Divergent.
    """
    x = as_rational(x)
    if x not in (1, -1):
        raise ValueError("endpoint classification needs x = +1 or x = -1")
    if params.p != params.q + 1:
        raise ValueError(f"endpoint rule needs p = q + 1, got p={params.p}, q={params.q}")
    s = params.excess
    if params.terminates:
        raise TerminatingSeriesError(
            "series terminates; it is a polynomial in x",
            verdict=ConvergenceVerdict(Verdict.ABSOLUTELY_CONVERGENT, TERMINATING, s),
        )
    if s > 0:
        return ConvergenceVerdict(Verdict.ABSOLUTELY_CONVERGENT, ABSOLUTE, s)
    if s <= -1:
        return ConvergenceVerdict(Verdict.DIVERGENT, DIVERGENT, s)
    if x == -1:
        return ConvergenceVerdict(Verdict.CONDITIONALLY_CONVERGENT, CONDITIONAL, s)
    return ConvergenceVerdict(Verdict.DIVERGENT, HARMONIC_COMPARISON, s)


def classify_point(params: HypergeometricParams, x: RationalLike) -> ConvergenceVerdict:
    """Convergence verdict at any real rational x, terminating series included."""
    x = as_rational(x)
    s = params.excess if params.p == params.q + 1 else None
    if params.terminates:
        return ConvergenceVerdict(Verdict.ABSOLUTELY_CONVERGENT, TERMINATING, s)
    if x == 0:
        return ConvergenceVerdict(Verdict.ABSOLUTELY_CONVERGENT, "x=0:trivial", s)
    radius = classify_radius(params.p, params.q)
    if radius is Radius.ALL_X:
        return ConvergenceVerdict(Verdict.ABSOLUTELY_CONVERGENT, ENTIRE, s)
    if radius is Radius.ONLY_AT_ZERO:
        return ConvergenceVerdict(Verdict.DIVERGENT, ZERO_RADIUS, s)
    if abs(x) < 1:
        return ConvergenceVerdict(Verdict.ABSOLUTELY_CONVERGENT, INSIDE_DISK, s)
    if abs(x) > 1:
        return ConvergenceVerdict(Verdict.DIVERGENT, OUTSIDE_DISK, s)
    return classify_endpoint(params, x)
