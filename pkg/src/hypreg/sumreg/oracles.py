"""Classical summation oracles: Abel, Euler transform, Cesaro.

These are independent of the telescoping machinery and serve as cross-checks
of the values it assigns.  Each returns a :class:`RegularizedValue` carrying
an error estimate, or raises :class:`~hypreg.errors.NoStableLimitError`.
"""

from __future__ import annotations

import enum
import math
import operator
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import gmpy2
import mpmath
from gmpy2 import mpfr

from ..errors import NoStableLimitError
from ..exactnum import format_rational
from .sequences import AlternatingPolynomial, Explicit, SequenceSpec, to_mpfr

__all__ = [
    "Method",
    "RegularizedValue",
    "abel_mean_limit",
    "abel_sum",
    "cesaro_sum",
    "default_tolerance",
    "euler_transform_sum",
]

PRECISION = 192  # bits
ABEL_TAIL = mpfr("1e-24")
CHUNK = 4096
# x^n = e^(-400) by n h = 400; polynomially bounded terms have died out long before
ABEL_GROWTH_HORIZON = 400


class Method(str, enum.Enum):
    ABEL_MEAN = "AbelMean"
    ABEL_SUM = "AbelSum"
    EULER = "EulerTransform"
    CESARO = "Cesaro"
    SYMBOLIC = "SymbolicTelescoper"
    SYMMETRY = "SymmetryFormula"


@dataclass(frozen=True)
class RegularizedValue:
    """A value assigned to a series or sequence by one method.

    ``exact`` is set only when the method terminates in exact arithmetic; in
    that case ``value`` is its float rounding and ``error_estimate`` covers
    the rounding.
    """

    value: float
    method: Method
    error_estimate: float
    exact: Fraction | None = None
    detail: str = ""

    def __post_init__(self):
        if not self.error_estimate >= 0:
            raise ValueError("error_estimate must be nonnegative")

    @classmethod
    def from_exact(cls, q: Fraction, method: Method, detail: str = "") -> "RegularizedValue":
        q = Fraction(q)
        value = float(q)
        err = 0.0 if Fraction(value) == q else math.ulp(value)
        return cls(value, method, err, q, detail)

    def agrees_with(self, other: "RegularizedValue | float", slack: float = 0.0) -> bool:
        if isinstance(other, RegularizedValue):
            return abs(self.value - other.value) <= self.error_estimate + other.error_estimate + slack
        return abs(self.value - other) <= self.error_estimate + slack

    def __str__(self):
        if self.exact is not None:
            return f"{format_rational(self.exact)} [{self.method.value}, exact]"
        return f"{self.value:.12g} +/- {self.error_estimate:.1e} [{self.method.value}]"


def default_tolerance(fallback: float) -> float:
    """Tolerance from $HYPREG_TOLERANCE when set, else ``fallback``."""
    raw = os.environ.get("HYPREG_TOLERANCE")
    if raw:
        return float(raw)
    return fallback


def _as_spec(terms) -> SequenceSpec:
    if isinstance(terms, SequenceSpec):
        return terms
    if callable(terms):
        return Explicit(terms)
    raise TypeError(f"expected a SequenceSpec or callable, got {type(terms).__name__}")


def _finish(value: mpfr, estimate, method, detail) -> RegularizedValue:
    v = float(value)
    est = float(estimate) + math.ulp(v) + math.ulp(1.0) * 1e-3
    return RegularizedValue(v, method, est, None, detail)


# -- extrapolation to h = 0 ---------------------------------------------------

def _neville(hs: Sequence, vals: Sequence, order: int) -> tuple:
    """Polynomial (Richardson) extrapolation to h = 0.

    Returns the two final order-capped extrapolants; their gap is the
    error estimate.
    """
    table = []
    for i, v in enumerate(vals):
        row = [v]
        for k in range(1, min(i, order) + 1):
            prev = table[i - 1][k - 1]
            row.append(row[k - 1] + (row[k - 1] - prev) * hs[i] / (hs[i - k] - hs[i]))
        table.append(row)
    return table[-1][-1], table[-2][-1]


def _log_basis(k: int) -> list[Callable]:
    basis = [lambda h: mpmath.mpf(1)]
    p = 1
    while len(basis) < k:
        basis.append(lambda h, p=p: h ** p)
        if len(basis) < k:
            basis.append(lambda h, p=p: h ** p * mpmath.log(h))
        p += 1
    return basis


def _log_extrapolate(hs, vals, k: int) -> tuple:
    """Least-squares-free fit on {1, h, h log h, h^2, h^2 log h, ...}.

    Used when the Abel function has the h log h behaviour produced by
    convergent terms decaying like 1/n^2.
    """
    with mpmath.workprec(PRECISION):
        H = [_to_mp(h) for h in hs]
        V = [_to_mp(v) for v in vals]
        basis = _log_basis(k)

        def fit(idx):
            A = mpmath.matrix([[f(H[i]) for f in basis] for i in idx])
            return mpmath.lu_solve(A, mpmath.matrix([V[i] for i in idx]))[0]

        n = len(H)
        a = fit(range(n - k, n))
        b = fit(range(n - k - 1, n - 1))
        return mpfr(str(a)), mpfr(str(abs(a - b)))


def _to_mp(x):
    # den is a power of two, so the division is exact at working precision
    num, den = to_mpfr(x).as_integer_ratio()
    return mpmath.mpf(num) / den


# -- Abel ---------------------------------------------------------------------

def _abel_value(spec: SequenceSpec, h, cache: list, max_terms: int) -> mpfr:
    """sum_n a_n (1 - h)^n, in blocks of CHUNK terms.

    ``cache`` holds the terms computed so far and is shared between grid
    points.  The sum ends once the last 64 products are below ABEL_TAIL and
    the geometric weight has gone well past its decay scale (n h > 4).
    """
    x = 1 - h
    steps = [mpfr(1)]
    for _ in range(CHUNK - 1):
        steps.append(steps[-1] * x)
    step_block = steps[-1] * x
    total = mpfr(0)
    weight = mpfr(1)
    start = 0
    while True:
        if start == len(cache):
            if len(cache) >= max_terms:
                raise NoStableLimitError(
                    f"step budget of {max_terms} terms exhausted at x = 1 - {float(h):g}",
                    method=Method.ABEL_SUM,
                )
            cache.extend(spec.values(len(cache), CHUNK))
        weights = map(weight.__mul__, steps)
        products = list(map(operator.mul, cache[start:start + CHUNK], weights))
        total += gmpy2.fsum(products)
        weight *= step_block
        start += CHUNK
        if start * h > 4 and max(map(abs, products[-64:])) < ABEL_TAIL:
            return total
        if start * h > ABEL_GROWTH_HORIZON:
            raise NoStableLimitError(
                f"power series still not decaying at x = 1 - {float(h):g} after {start} terms; "
                "terms grow faster than any polynomial",
                method=Method.ABEL_SUM,
            )


def abel_sum(
    terms,
    *,
    tolerance: float | None = None,
    j_min: int = 3,
    j_max: int | None = None,
    order: int = 4,
    max_terms: int = 4_000_000,
    method: Method = Method.ABEL_SUM,
) -> RegularizedValue:
    """lim_{x -> 1-} sum_n a_n x^n.

    The power series is summed at x_j = 1 - 2^-j for j = j_min, j_min + 1, ...
    and the values are extrapolated to x = 1 by Richardson extrapolation
    capped at ``order``.  The grid grows one point at a time and stops as
    soon as the last two extrapolants agree within ``tolerance``, so cheap
    cases never pay for the fine grid points.  If j_max is reached without
    settling, a fit on a basis that also carries h^p log h terms is tried.
    """
    spec = _as_spec(terms)
    tolerance = default_tolerance(1e-8) if tolerance is None else tolerance
    j_max = 10 if j_max is None else j_max
    if j_max - j_min < order + 1:
        raise ValueError("grid too short for the requested extrapolation order")
    cache: list = []
    with gmpy2.context(precision=PRECISION):
        hs, vals = [], []
        for j in range(j_min, j_max + 1):
            hs.append(mpfr(2) ** -j)
            vals.append(_abel_value(spec, hs[-1], cache, max_terms))
            if j - j_min < order + 1:
                continue
            best, prev = _neville(hs, vals, order)
            estimate = abs(best - prev)
            if estimate <= tolerance:
                return _finish(best, estimate, method, f"richardson order {order}, j <= {j}")
        k = min(7, len(hs) - 1)
        lbest, lest = _log_extrapolate(hs, vals, k)
        if lest <= tolerance:
            return _finish(lbest, lest, method, f"log-augmented fit, {k} terms")
    raise NoStableLimitError(
        f"Abel extrapolants did not settle within {tolerance:g} (last estimate {float(min(estimate, lest)):.3g})",
        method=method,
        last_value=float(best),
        last_estimate=float(estimate),
    )


def abel_mean_limit(sequence, **kwargs) -> RegularizedValue:
    """Limit of F(1), F(2), ... as the Abel sum of F(1) + sum (F(n) - F(n-1))."""
    spec = _as_spec(sequence)
    if kwargs.get("tolerance") is None:
        kwargs["tolerance"] = default_tolerance(1e-6)
    kwargs["method"] = Method.ABEL_MEAN
    return abel_sum(spec.telescoped(), **kwargs)


# -- Euler transform ----------------------------------------------------------

EXACT_ZERO_RUN = 8  # a difference row this long and all zero counts as terminated


def _exact_euler(spec: SequenceSpec, depth: int) -> RegularizedValue | None:
    """Exact transform when the differences of a_n die out within ``depth``."""
    row = [Fraction(spec(n)) * (-1) ** n for n in range(depth + EXACT_ZERO_RUN)]
    total = Fraction(0)
    for k in range(depth):
        if not any(row):
            return RegularizedValue.from_exact(total, Method.EULER, f"terminated at depth {k}")
        if len(row) <= EXACT_ZERO_RUN:
            break
        total += (-1) ** k * row[0] / 2 ** (k + 1)
        row = [b - a for a, b in zip(row, row[1:])]
    return None


def euler_transform_sum(
    terms,
    *,
    tolerance: float | None = None,
    max_depth: int | None = None,
) -> RegularizedValue:
    """Sum a_0 - a_1 + a_2 - ... as sum_k (-1)^k (Delta^k a)_0 / 2^(k+1).

    ``terms`` describes the signed series terms t_n = (-1)^n a_n.  For an
    :class:`AlternatingPolynomial` the differences die out after the degree
    and the result is exact.
    """
    spec = _as_spec(terms)
    tolerance = default_tolerance(1e-8) if tolerance is None else tolerance
    if isinstance(spec, AlternatingPolynomial):
        row = [spec.poly(Fraction(n)) for n in range(spec.poly.degree + 1)]
        total = Fraction(0)
        k = 0
        while row:
            total += (-1) ** k * Fraction(row[0]) / 2 ** (k + 1)
            row = [b - a for a, b in zip(row, row[1:])]
            k += 1
        return RegularizedValue.from_exact(total, Method.EULER, f"terminated at depth {k}")

    depth = 200 if max_depth is None else max_depth
    if spec.exact:
        exact = _exact_euler(spec, min(depth, 40))
        if exact is not None:
            return exact
    with gmpy2.context(precision=PRECISION + 2 * depth):
        raw = spec.values(0, depth + 1)
        row = [v if n % 2 == 0 else -v for n, v in enumerate(raw)]
        total = mpfr(0)
        increments = []
        for k in range(depth + 1):
            inc = row[0] / mpfr(2) ** (k + 1)
            if k % 2:
                inc = -inc
            total += inc
            increments.append(abs(inc))
            row = [b - a for a, b in zip(row, row[1:])]
            if k >= 4:
                last, before = increments[-1], increments[-2]
                if last == 0 and before == 0:
                    return _finish(total, mpfr(0), Method.EULER, f"differences vanished at depth {k}")
                if before > 0:
                    r = min(max(last / before, mpfr("0.5")), mpfr("0.95"))
                    estimate = 2 * last * r / (1 - r)
                    if last / before < 0.95 and estimate <= tolerance:
                        return _finish(total, estimate, Method.EULER, f"settled at depth {k}")
    raise NoStableLimitError(
        f"Euler transform not settling by depth {depth}", method=Method.EULER, last_value=float(total)
    )


# -- Cesaro -------------------------------------------------------------------

def cesaro_sum(
    terms,
    order: int = 1,
    *,
    tolerance: float | None = None,
    max_depth: int | None = None,
    base: int = 64,
    extrapolation_order: int = 4,
) -> RegularizedValue:
    """Limit of the (C, order) means of the partial sums.

    The means are sampled at N = base * 2^i and at N + 1, extrapolated in 1/N
    separately for each parity, and accepted only when both settle on the
    same value.  Series such as 1 - 2 + 3 - ... whose (C, 1) means keep
    oscillating are rejected.
    """
    if order < 0:
        raise ValueError("Cesaro order must be nonnegative")
    spec = _as_spec(terms)
    tolerance = default_tolerance(1e-8) if tolerance is None else tolerance
    levels = 10 if max_depth is None else max_depth
    if levels < extrapolation_order + 1:
        raise ValueError("too few levels for the extrapolation order")
    with gmpy2.context(precision=PRECISION):
        running = [mpfr(0)] * (order + 1)
        cum: list = []  # order-fold cumulative sums of the partial sums

        def extend(upto):
            vals = spec.values(len(cum), upto + 1 - len(cum))
            for v in vals:
                for stage in range(order + 1):
                    running[stage] += v
                    v = running[stage]
                cum.append(v)

        def mean(N):
            return cum[N] / math.comb(N + order, order)

        for top in range(extrapolation_order + 1, levels + 1):
            extend(base * 2 ** top + 1)
            results = []
            for parity in (0, 1):
                Ns = [base * 2 ** i + parity for i in range(top + 1)]
                hs = [mpfr(1) / N for N in Ns]
                best, prev = _neville(hs, [mean(N) for N in Ns], extrapolation_order)
                results.append((best, abs(best - prev)))
            (even, e_est), (odd, o_est) = results
            estimate = max(e_est, o_est, abs(even - odd))
            if estimate <= tolerance:
                return _finish((even + odd) / 2, estimate, Method.CESARO, f"(C,{order}) means, N <= {base * 2 ** top + 1}")
    raise NoStableLimitError(
        f"Cesaro (C,{order}) mean not settling (estimate {float(estimate):.3g})",
        method=Method.CESARO,
        last_value=float(even),
        last_estimate=float(estimate),
    )
