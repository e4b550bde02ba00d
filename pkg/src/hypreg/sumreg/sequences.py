"""Sequence and series descriptors consumed by the summation engine.

A descriptor is evaluated two ways: ``spec(n)`` returns a single value, exact
(``Fraction``) whenever the family allows it, and ``spec.values(start, count)``
returns a block of high-precision ``gmpy2.mpfr`` values for the numerical
oracles.  Oracles must run inside a gmpy2 context of adequate precision; the
cancellation in Abel means of polynomially growing alternating terms is far
beyond what float64 can absorb.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import gmpy2
from gmpy2 import mpfr

from ..exactnum import Polynomial, RationalLike, as_rational

__all__ = [
    "AlternatingPolynomial",
    "AlternatingTrigPoly",
    "EvenElementary",
    "Explicit",
    "SequenceSpec",
    "Shifted",
    "Telescoped",
    "to_mpfr",
]


def to_mpfr(v) -> mpfr:
    if isinstance(v, Fraction):
        return mpfr(v.numerator) / v.denominator
    if isinstance(v, (int, float)):
        return mpfr(v)
    if isinstance(v, type(mpfr(0))):
        return v
    try:
        return mpfr(v)
    except TypeError:
        # mpmath and numpy scalars
        return mpfr(str(v))


def _sign(n: int) -> int:
    return 1 if n % 2 == 0 else -1


class SequenceSpec:
    """A map n -> value on the integers."""

    def __call__(self, n: int):
        raise NotImplementedError

    def values(self, start: int, count: int) -> list:
        return [to_mpfr(self(n)) for n in range(start, start + count)]

    def shifted(self, s: int) -> "SequenceSpec":
        """The sequence n -> self(n + s)."""
        return Shifted(self, s)

    def telescoped(self) -> "Telescoped":
        """Series whose partial sums reproduce self(1), self(2), ..."""
        return Telescoped(self)

    @property
    def exact(self) -> bool:
        """True when __call__ returns exact rationals."""
        return False


@dataclass(frozen=True)
class Explicit(SequenceSpec):
    term: Callable[[int], object]
    description: str = field(default="", compare=False)
    is_exact: bool = field(default=False, compare=False)

    def __call__(self, n):
        return self.term(n)

    @property
    def exact(self):
        return self.is_exact


@dataclass(frozen=True)
class Shifted(SequenceSpec):
    base: SequenceSpec
    offset: int

    def __call__(self, n):
        return self.base(n + self.offset)

    def values(self, start, count):
        return self.base.values(start + self.offset, count)

    def shifted(self, s):
        return Shifted(self.base, self.offset + s)

    @property
    def exact(self):
        return self.base.exact


@dataclass(frozen=True)
class Telescoped(SequenceSpec):
    """c_0 = F(1), c_n = F(n + 1) - F(n): a series summing to the limit of F."""

    base: SequenceSpec

    def __call__(self, n):
        if n == 0:
            return self.base(1)
        return self.base(n + 1) - self.base(n)

    def values(self, start, count):
        if start == 0:
            vals = self.base.values(1, count)
            return [vals[0]] + [b - a for a, b in zip(vals, vals[1:])]
        vals = self.base.values(start, count + 1)
        return [b - a for a, b in zip(vals, vals[1:])]

    @property
    def exact(self):
        return self.base.exact


@dataclass(frozen=True)
class AlternatingPolynomial(SequenceSpec):
    """n -> (-1)^n p(n)."""

    poly: Polynomial

    def __post_init__(self):
        if not isinstance(self.poly, Polynomial):
            object.__setattr__(self, "poly", Polynomial(self.poly))

    def __call__(self, n):
        return _sign(n) * Fraction(self.poly(Fraction(n)))

    def values(self, start, count):
        coeffs = self.poly.coefficients
        if not coeffs or count <= 0:
            return [mpfr(0)] * max(count, 0)
        den = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        d = len(ints) - 1

        def horner(n):
            acc = 0
            for c in reversed(ints):
                acc = acc * n + c
            return acc

        # Leading differences at n = start, then rebuild consecutive values
        # as d-fold running sums of the constant top difference.
        row = [horner(start + i) for i in range(d + 1)]
        leading = []
        for _ in range(d + 1):
            leading.append(row[0])
            row = [b - a for a, b in zip(row, row[1:])]
        seq = [leading[d]] * count
        for k in range(d - 1, -1, -1):
            seq = list(itertools.accumulate(seq[: count - 1], initial=leading[k]))
        first_odd = 1 - start % 2
        seq[first_odd::2] = [-v for v in seq[first_odd::2]]
        if den == 1:
            return list(map(mpfr, seq))
        return [mpfr(v) / den for v in seq]

    def shifted(self, s):
        return AlternatingPolynomial(self.poly.shift(s) * _sign(s))

    def telescoped(self):
        return Telescoped(self)

    @property
    def exact(self):
        return True


@dataclass(frozen=True)
class AlternatingTrigPoly(SequenceSpec):
    """n -> (-1)^(n-1) n^(2m-1) sin(n theta), for -pi < theta < pi.

    ``pi_fraction`` records theta as an exact multiple of pi when known, so
    that the high-precision path does not inherit float rounding of theta.
    """

    m: int
    theta: float
    pi_fraction: Fraction | None = None

    @classmethod
    def pi_multiple(cls, m: int, frac: RationalLike) -> "AlternatingTrigPoly":
        frac = as_rational(frac)
        return cls(m, float(frac) * math.pi, frac)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if self.pi_fraction is not None:
            if not -1 < self.pi_fraction < 1:
                raise ValueError("theta must lie strictly between -pi and pi")
        elif not -math.pi < self.theta < math.pi:
            raise ValueError("theta must lie strictly between -pi and pi")

    def theta_hp(self) -> mpfr:
        if self.pi_fraction is not None:
            return to_mpfr(self.pi_fraction) * gmpy2.const_pi()
        return mpfr(self.theta)

    def __call__(self, n):
        return -_sign(n) * n ** (2 * self.m - 1) * math.sin(n * self.theta)

    def values(self, start, count):
        th = self.theta_hp()
        two_cos = 2 * gmpy2.cos(th)
        prev = gmpy2.sin((start - 1) * th)
        cur = gmpy2.sin(start * th)
        power = 2 * self.m - 1
        out = []
        for n in range(start, start + count):
            out.append(-_sign(n) * mpfr(n) ** power * cur)
            prev, cur = cur, two_cos * cur - prev
        return out


@dataclass(frozen=True)
class EvenElementary(SequenceSpec):
    """n -> (-1)^n sum_{u=d}^{t-1+d} mu(n + eps*t/2 - eps*u), d = (1 - eps)/2.

    ``mu`` must be even; it is called with exact rational arguments.
    """

    mu: Callable[[Fraction], object]
    t: int = 1
    epsilon: int = 1

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if self.t < 1:
            raise ValueError("t must be a positive integer")

    @property
    def delta(self) -> int:
        return (1 - self.epsilon) // 2

    def arguments(self, n: int) -> list[Fraction]:
        eps, t = self.epsilon, self.t
        return [n + Fraction(eps * t, 2) - eps * u for u in range(self.delta, t + self.delta)]

    def __call__(self, n):
        total = sum(self.mu(x) for x in self.arguments(n))
        return _sign(n) * total
