"""Binomial series (1 + x)^a for integer a: truncation, exact remainder, endpoint value.

For a = -m the expansion of (1 + x)^(-m) stopped after the x^k term leaves
the remainder

    R_k^m(x) = (-1)^(k+1) / (1+x)^m * sum_{u=0}^{m-1} C(k+u, u) C(m+k, m-1-u) x^(k+1+u)

which is checked here as an exact rational identity.  At x = 1 the quantity
(-1)^(k+1) 2^m R_k^m(1) is a polynomial in k of degree m - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InterpolationMismatch
from .exactnum import Polynomial, RationalLike, as_rational, generalized_binomial, interpolate

__all__ = [
    "RemainderQuery",
    "binomial_partial_sum",
    "endpoint_value",
    "expansion_coefficient",
    "monotone_decay_start",
    "remainder",
    "remainder_identity_check",
    "remainder_poly_in_k",
    "series_magnitude_poly",
]


@dataclass(frozen=True)
class RemainderQuery:
    m: int
    k: int
    x: Fraction

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a nonnegative integer, got {self.k!r}")
        x = as_rational(self.x)
        if not -1 < x <= 1:
            raise ValueError(f"x must lie in (-1, 1], got {x}")
        object.__setattr__(self, "x", x)


def _query(q, k=None, x=None) -> RemainderQuery:
    if isinstance(q, RemainderQuery):
        return q
    return RemainderQuery(q, k, x)


def expansion_coefficient(m: int, n: int) -> Fraction:
    """Coefficient of x^n in (1 + x)^(-m): (-1)^n C(m + n - 1, n)."""
    return (-1) ** n * generalized_binomial(m + n - 1, n)


def series_magnitude_poly(m: int) -> Polynomial:
    """n -> C(n + m - 1, m - 1) as a polynomial of degree m - 1.

    At x = 1 the binomial series of (1+x)^(-m) is sum (-1)^n times this.
    """
    if m < 1:
        raise ValueError("m must be positive")
    p = Polynomial.constant(1)
    for i in range(1, m):
        p = p * Polynomial((1, Fraction(1, i)))  # (n + i) / i
    return p


def binomial_partial_sum(q: RemainderQuery | int, k: int | None = None, x: RationalLike | None = None) -> Fraction:
    """sum_{n=0}^{k} (-1)^n C(m+n-1, n) x^n."""
    q = _query(q, k, x)
    total = Fraction(0)
    power = Fraction(1)
    for n in range(q.k + 1):
        total += expansion_coefficient(q.m, n) * power
        power *= q.x
    return total


def remainder(q: RemainderQuery | int, k: int | None = None, x: RationalLike | None = None) -> Fraction:
    q = _query(q, k, x)
    m, k, x = q.m, q.k, q.x
    inner = sum(
        (comb(k + u, u) * comb(m + k, m - 1 - u) * x ** (k + 1 + u) for u in range(m)),
        Fraction(0),
    )
    return (-1) ** (k + 1) * inner / (1 + x) ** m


def remainder_identity_check(q: RemainderQuery | int, k: int | None = None, x: RationalLike | None = None) -> bool:
    q = _query(q, k, x)
    return binomial_partial_sum(q) + remainder(q) == (1 + q.x) ** -q.m


def remainder_poly_in_k(m: int) -> Polynomial:
    """Polynomial P with R_k^m(1) = (-1)^(k+1) P(k) / 2^m.

    Interpolated from k = 0..m-1 and checked against k = m..2m-1.
    """
    if m < 1:
        raise ValueError("m must be positive")

    def scaled(k):
        return remainder(m, k, 1) * (-1) ** (k + 1) * 2 ** m

    ks = list(range(m))
    p = interpolate(ks, [scaled(k) for k in ks])
    for k in range(m, 2 * m):
        if p(Fraction(k)) != scaled(k):
            raise InterpolationMismatch(f"P_{m}({k}) disagrees with the remainder")
    return p


def monotone_decay_start(m: int, x: RationalLike) -> int:
    """Index from which |R_k^m(x)| decreases strictly in k, for |x| < 1.

    Past this index the magnitudes C(m+n-1, n)|x|^n of the series terms are
    themselves decreasing (ratio |x|(m+n)/(n+1) < 1).
    """
    x = as_rational(x)
    if not abs(x) < 1:
        raise ValueError("decay needs |x| < 1")
    ax = abs(x)
    k = 0
    while ax * (m + k) >= k + 1:
        k += 1
    return k


def endpoint_value(a: int, x: RationalLike) -> Fraction:
    """(1 + x)^a exactly, for integer a != 0 and -1 < x <= 1."""
    if isinstance(a, bool) or not isinstance(a, int):
        raise TypeError("a must be an integer")
    if a == 0:
        raise ValueError("a must be nonzero")
    x = as_rational(x)
    if not -1 < x <= 1:
        raise ValueError(f"x must lie in (-1, 1], got {x}")
    return (1 + x) ** a
