"""Closed-form generating functions for alternating summands.

Two families are covered:

* ``(-1)^n p(n)`` with p a polynomial: F(n) = (-1)^n q(n) where
  -q(n+1) - q(n) = p(n).  Solved exactly.
* ``(-1)^(n-1) n^(2m-1) sin(n theta)``: F(n) = (-1)^n A(n - 1/2) with A an
  even trigonometric polynomial in s = n - 1/2.  Solved in multiprecision
  floating point, since the residual at n = 15 scales like n^(2m-1).

Given F, a series sums to lim F - F(start).  The limit of (-1)^n times a
polynomial, or times an even function of n - 1/2, is zero in the regular
summation framework, which makes both values symbolic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import SingularSystemError
from ..exactnum import Polynomial
from .oracles import Method, RegularizedValue

__all__ = [
    "TrigTelescoper",
    "alternating_series_value",
    "find_alternating_telescoper",
    "find_trig_telescoper",
    "trig_series_value",
]

TRIG_RESIDUAL_LIMIT = 1e-10
TRIG_PROBES = 16


def find_alternating_telescoper(p: Polynomial) -> Polynomial:
    """q with F(n) = (-1)^n q(n) satisfying F(n+1) - F(n) = (-1)^n p(n)."""
    # (S + I) q = -p with S the shift; S + I = 2 + Delta, so
    # q = -sum_k (-Delta)^k p / 2^(k+1), a finite sum.
    q = Polynomial()
    term = p
    k = 0
    while not term.is_zero():
        q = q - term * Fraction((-1) ** k, 2 ** (k + 1))
        term = term.difference()
        k += 1
    for n in range(2 * max(p.degree, 0) + 4):
        lhs = (-1) ** (n + 1) * q(Fraction(n + 1)) - (-1) ** n * q(Fraction(n))
        if lhs != (-1) ** n * p(Fraction(n)):
            raise ArithmeticError(f"telescoper identity fails at n={n}")
    return q


def alternating_series_value(p: Polynomial, start: int = 0) -> RegularizedValue:
    """sum_{n >= start} (-1)^n p(n) = -(-1)^start q(start), exactly."""
    q = find_alternating_telescoper(p)
    value = -((-1) ** start) * Fraction(q(Fraction(start)))
    return RegularizedValue.from_exact(value, Method.SYMBOLIC, f"telescoper q = {q}")


TRIG_DPS = 40


@dataclass(frozen=True)
class TrigTelescoper:
    """F(n) = (-1)^n (sum_u beta[u-1] s^(2u-1) sin(s theta) + sum_u beta_bar[u] s^(2u) cos(s theta)),
    s = n - 1/2, with F(n+1) - F(n) = (-1)^(n-1) n^(2m-1) sin(n theta).

    Coefficients are mpmath numbers; evaluation runs at ``TRIG_DPS`` digits and
    returns mpf.
    """

    m: int
    theta: float
    beta: tuple
    beta_bar: tuple

    def __call__(self, n):
        with mpmath.workdps(TRIG_DPS):
            s = mpmath.mpf(n) - mpmath.mpf(1) / 2
            th = mpmath.mpf(self.theta)
            sin_s, cos_s = mpmath.sin(s * th), mpmath.cos(s * th)
            a = sum(b * s ** (2 * u + 1) * sin_s for u, b in enumerate(self.beta))
            a += sum(b * s ** (2 * u) * cos_s for u, b in enumerate(self.beta_bar))
            return (-1) ** (n % 2) * a

    def target(self, n):
        with mpmath.workdps(TRIG_DPS):
            return (-1) ** ((n - 1) % 2) * mpmath.mpf(n) ** (2 * self.m - 1) * mpmath.sin(n * mpmath.mpf(self.theta))

    def residual(self, n) -> float:
        with mpmath.workdps(TRIG_DPS):
            return float(self(n + 1) - self(n) - self.target(n))


def find_trig_telescoper(m: int, theta: float) -> TrigTelescoper:
    if m < 1:
        raise ValueError("m must be a positive integer")
    if theta == 0 or not -math.pi < theta < math.pi:
        raise ValueError("theta must be nonzero and strictly between -pi and pi")
    # With c = n, A(c + 1/2) + A(c - 1/2) = c^(2m-1) sin(c theta).  Expand both
    # sides on c^k sin(c theta) (k odd) and c^k cos(c theta) (k even).
    def sin_row(k):
        return (k - 1) // 2

    def cos_row(k):
        return m + k // 2

    with mpmath.workdps(TRIG_DPS):
        half = mpmath.mpf(theta) / 2
        cos_half, sin_half = mpmath.cos(half), mpmath.sin(half)
        M = mpmath.zeros(2 * m, 2 * m)
        for u in range(1, m + 1):  # s^(2u-1) sin(s theta)
            col, deg = u - 1, 2 * u - 1
            for k in range(deg + 1):
                e = deg - k
                w = mpmath.mpf(2 * math.comb(deg, k)) / 2 ** e
                if e % 2 == 0:
                    M[sin_row(k), col] += w * cos_half
                else:
                    M[cos_row(k), col] += w * sin_half
        for u in range(m):  # s^(2u) cos(s theta)
            col, deg = m + u, 2 * u
            for k in range(deg + 1):
                e = deg - k
                w = mpmath.mpf(2 * math.comb(deg, k)) / 2 ** e
                if e % 2 == 0:
                    M[cos_row(k), col] += w * cos_half
                else:
                    M[sin_row(k), col] -= w * sin_half
        rhs = mpmath.zeros(2 * m, 1)
        rhs[sin_row(2 * m - 1)] = 1
        try:
            sol = mpmath.lu_solve(M, rhs)
        except ZeroDivisionError as exc:
            raise SingularSystemError(f"telescoper system singular for m={m}, theta={theta}") from exc
        coeffs = [sol[i] for i in range(2 * m)]
    tel = TrigTelescoper(m, theta, tuple(coeffs[:m]), tuple(coeffs[m:]))
    worst = max(abs(tel.residual(n)) for n in range(TRIG_PROBES))
    if worst > TRIG_RESIDUAL_LIMIT:
        raise SingularSystemError(f"telescoper residual {worst:.3g} exceeds {TRIG_RESIDUAL_LIMIT:g}")
    return tel


def trig_series_value(m: int, theta: float) -> RegularizedValue:
    """sum_{u >= 1} (-1)^(u-1) u^(2m-1) sin(u theta) as lim F - F(1), lim F = 0."""
    tel = find_trig_telescoper(m, theta)
    worst = max(abs(tel.residual(n)) for n in range(TRIG_PROBES))
    value = float(-tel(1))
    return RegularizedValue(value, Method.SYMBOLIC, worst + math.ulp(1.0), None, "trig telescoper")
