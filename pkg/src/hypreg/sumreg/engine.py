"""Generalized limits and the reflection-symmetry summation formula."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from ..errors import SymmetryError
from .oracles import Method, RegularizedValue, abel_mean_limit, default_tolerance
from .sequences import AlternatingPolynomial, EvenElementary, Explicit, SequenceSpec
from .telescopers import alternating_series_value

__all__ = ["generalized_limit", "symmetric_sum", "verify_even_alternating_limit"]

PROBES = range(-12, 13)


def generalized_limit(F: SequenceSpec, **abel_options) -> RegularizedValue:
    """Limit of F(1), F(2), ... as the regularized sum of its increments.

    (-1)^n p(n) is handled symbolically: F(1) plus the telescoper value of
    the increments (-1)^n (p(n) + p(n-1)) from n = 2 on.  Everything else
    goes to the Abel mean.
    """
    if isinstance(F, AlternatingPolynomial):
        p = F.poly
        increments = p + p.shift(-1)
        tail = alternating_series_value(increments, start=2)
        value = Fraction(F(1)) + tail.exact
        return RegularizedValue.from_exact(value, Method.SYMBOLIC, "alternating polynomial")
    if not isinstance(F, SequenceSpec):
        F = Explicit(F)
    return abel_mean_limit(F, **abel_options)


def _close(a, b) -> bool:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    a, b = float(a), float(b)
    return abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


def symmetric_sum(f: SequenceSpec, epsilon: int, t: int = 1, **abel_options) -> RegularizedValue:
    """sum_{u >= 1} f(u) for f with f(-x) = f(x - epsilon t).

    Value: (epsilon/2) sum_{u=d}^{t-1+d} (lim_n f(n - epsilon u) - f(-epsilon u)) - f(0)/2,
    d = (1 - epsilon)/2.  For epsilon = 0 (even f) this is -f(0)/2.
    """
    if epsilon not in (-1, 0, 1):
        raise ValueError("epsilon must be -1, 0 or 1")
    if t < 1:
        raise ValueError("t must be a positive integer")
    if not isinstance(f, SequenceSpec):
        f = Explicit(f)
    for x in PROBES:
        left, right = f(-x), f(x - epsilon * t)
        if not _close(left, right):
            raise SymmetryError(f"f({-x}) = {left} but f({x - epsilon * t}) = {right}", x=x)

    f0 = f(0)
    exact = isinstance(f0, (int, Fraction))
    total = -Fraction(f0) / 2 if exact else -float(f0) / 2
    estimate = 0.0
    if epsilon:
        delta = (1 - epsilon) // 2
        for u in range(delta, t + delta):
            lim = generalized_limit(f.shifted(-epsilon * u), **abel_options)
            edge = f(-epsilon * u)
            if exact and lim.exact is not None and isinstance(edge, (int, Fraction)):
                total += Fraction(epsilon, 2) * (lim.exact - Fraction(edge))
            else:
                exact = False
                total = float(total) + epsilon / 2 * (lim.value - float(edge))
                estimate += lim.error_estimate / 2
    if exact:
        return RegularizedValue.from_exact(Fraction(total), Method.SYMMETRY, f"epsilon={epsilon}, t={t}")
    return RegularizedValue(float(total), Method.SYMMETRY, estimate + 1e-15, None, f"epsilon={epsilon}, t={t}")


def verify_even_alternating_limit(
    mu: Callable[[Fraction], object],
    t: int = 1,
    epsilon: int = 1,
    tolerance: float | None = None,
    **abel_options,
) -> bool:
    """Whether (-1)^n sum_u mu(n + epsilon t/2 - epsilon u) has Abel-mean limit 0."""
    tolerance = default_tolerance(1e-6) if tolerance is None else tolerance
    for x in PROBES:
        x = Fraction(x, 2)
        if not _close(mu(x), mu(-x)):
            raise SymmetryError(f"mu is not even: mu({x}) != mu({-x})", x=x)
    seq = EvenElementary(mu, t, epsilon)
    result = abel_mean_limit(seq, tolerance=tolerance, **abel_options)
    return abs(result.value) <= tolerance
