"""Exact rational scalars, binomial coefficients, Pochhammer symbols, polynomials.

Every scalar is a :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  Floats are refused on input: a float that
looks like ``0.1`` is not the rational 1/10, and silently accepting it would
make boundary comparisons in the classifiers meaningless.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "ExactRational",
    "Polynomial",
    "as_rational",
    "format_rational",
    "generalized_binomial",
    "interpolate",
    "pochhammer",
    "poly_eval",
]

ExactRational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction without any rounding.

    Accepts integers, rationals and strings of the form ``"p"`` or ``"p/q"``.

    >>> as_rational("-3/6")
    Fraction(-1, 2)
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational parameters")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal literal {value!r} refused; write it as p/q")
        return Fraction(text)
    if isinstance(value, numbers.Real):
        raise TypeError(f"float {value!r} refused; pass Fraction or 'p/q' for exact input")
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def generalized_binomial(a: RationalLike, u: int) -> Fraction:
    """a(a-1)...(a-u+1) / u!, with any rational upper index."""
    if u < 0:
        raise ValueError("lower index must be nonnegative")
    a = as_rational(a)
    result = Fraction(1)
    for i in range(u):
        result = result * (a - i) / (i + 1)
    return result


def pochhammer(w: RationalLike, n: int) -> Fraction:
    """Rising factorial w(w+1)...(w+n-1); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    w = as_rational(w)
    result = Fraction(1)
    for i in range(n):
        result *= w + i
    return result


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with exact rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _strip(as_rational(c) for c in self.coefficients))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls((as_rational(c),))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "Polynomial":
        return cls((0,) * k + (as_rational(c),))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        # Horner; works for Fraction, int, float or gmpy2 arguments alike.
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, s: RationalLike) -> "Polynomial":
        """The polynomial n -> p(n + s)."""
        s = as_rational(s)
        linear = Polynomial((s, 1))
        acc = Polynomial()
        for c in reversed(self.coefficients):
            acc = acc * linear + c
        return acc

    def difference(self) -> "Polynomial":
        """Forward difference n -> p(n + 1) - p(n)."""
        return self.shift(1) - self

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                coef = "" if mag == 1 else f"{format_rational(mag)}*"
                body = f"{coef}n" if k == 1 else f"{coef}n^{k}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(value):
    if isinstance(value, Polynomial):
        return value
    try:
        return Polynomial.constant(value)
    except TypeError:
        return NotImplemented


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    return Fraction(p(as_rational(x)))


def interpolate(xs: Sequence[RationalLike], ys: Sequence[RationalLike]) -> Polynomial:
    """Exact Newton-form interpolation through the points (xs[i], ys[i])."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    xs = [as_rational(x) for x in xs]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    table = [as_rational(y) for y in ys]
    coeffs = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        coeffs.append(table[0])
    result = Polynomial()
    basis = Polynomial.constant(1)
    for i, c in enumerate(coeffs):
        result = result + basis * c
        basis = basis * Polynomial((-xs[i], 1))
    return result
