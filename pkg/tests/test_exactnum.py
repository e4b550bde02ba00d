import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import is_reduced, rationals
from hypreg.exactnum import (
    Polynomial,
    as_rational,
    format_rational,
    generalized_binomial,
    interpolate,
    pochhammer,
    poly_eval,
)


@pytest.mark.parametrize(
    "a, u, expected",
    [(5, 0, 1), (-2, 3, -4), (Fraction(1, 2), 2, Fraction(-1, 8))],
)
def test_generalized_binomial_examples(a, u, expected):
    assert generalized_binomial(a, u) == expected


def test_binomial_direct_products():
    # (-2)(-3)(-4)/3! and (1/2)(-1/2)/2!
    assert generalized_binomial(-2, 3) == Fraction(-2 * -3 * -4, 6)
    assert generalized_binomial(Fraction(1, 2), 2) == Fraction(1, 2) * Fraction(-1, 2) / 2


@pytest.mark.parametrize("w, n, expected", [(7, 0, 1), (1, 5, 120), (3, 4, 360)])
def test_pochhammer_examples(w, n, expected):
    assert pochhammer(w, n) == expected


def test_poly_eval_examples():
    assert poly_eval(Polynomial(), 5) == 0
    assert poly_eval(Polynomial.monomial(2), Fraction(3, 2)) == Fraction(9, 4)
    assert poly_eval(Polynomial((1, 2)), Fraction(-1, 2)) == 0


def test_negative_upper_index_reflection():
    for n in range(1, 13):
        for m in range(13):
            assert generalized_binomial(-n, m) == (-1) ** m * generalized_binomial(n + m - 1, m)


@given(rationals(), st.integers(0, 15))
def test_binomial_matches_sympy(a, u):
    expected = sp.binomial(sp.Rational(a.numerator, a.denominator), u)
    got = generalized_binomial(a, u)
    assert got == Fraction(int(expected.p), int(expected.q))
    assert is_reduced(got)


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_matches_math_comb(a, u):
    assert generalized_binomial(a, u) == math.comb(a, u)


@given(rationals(), st.integers(0, 15))
def test_pochhammer_recurrence_and_sympy(w, n):
    assert pochhammer(w, n + 1) == pochhammer(w, n) * (w + n)
    expected = sp.rf(sp.Rational(w.numerator, w.denominator), n)
    assert pochhammer(w, n) == Fraction(int(expected.p), int(expected.q))


@given(st.integers(0, 30), st.integers(0, 30))
def test_binomial_times_factorial_is_falling_pochhammer(a, u):
    if a < u:
        return
    assert generalized_binomial(a, u) * math.factorial(u) == pochhammer(a - u + 1, u)


def test_large_values_stay_exact():
    # far past 64-bit range
    v = generalized_binomial(Fraction(-7, 3), 60)
    assert is_reduced(v)
    assert abs(v.numerator) > 2**64 or v.denominator > 2**64


@pytest.mark.parametrize("text, expected", [("3", 3), ("-3/6", Fraction(-1, 2)), (" 4/2 ", 2), ("+1", 1)])
def test_as_rational_strings(text, expected):
    assert as_rational(text) == expected


@pytest.mark.parametrize("bad", [0.5, "0.5", "1e3", True])
def test_as_rational_refuses_inexact_input(bad):
    with pytest.raises((TypeError, ValueError)):
        as_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-8, 4)) == "-2"


def test_polynomial_normalizes_trailing_zeros():
    p = Polynomial((1, 2, 0, 0))
    assert p.degree == 1
    assert Polynomial((0, 0)).is_zero()
    assert Polynomial().degree == -1


polys = st.lists(rationals(9, 5), max_size=6).map(Polynomial)


@given(polys, polys, rationals())
def test_polynomial_ring_operations_pointwise(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(polys, rationals(), rationals())
def test_shift_and_difference(p, s, x):
    assert p.shift(s)(x) == p(x + s)
    assert p.difference()(x) == p(x + 1) - p(x)
    if p.degree >= 1:
        assert p.difference().degree == p.degree - 1


@given(polys)
def test_polynomial_matches_sympy_expansion(p):
    n = sp.Symbol("n")
    expr = sum(sp.Rational(c.numerator, c.denominator) * n**k for k, c in enumerate(p.coefficients))
    text = str(p).replace("^", "**")
    assert sp.expand(sp.sympify(text, locals={"n": n}) - expr) == 0


def test_polynomial_str():
    assert str(Polynomial((3, 2))) == "2*n + 3"
    assert str(Polynomial((Fraction(1, 4), Fraction(-1, 2)))) == "-1/2*n + 1/4"
    assert str(Polynomial()) == "0"


@given(polys)
def test_interpolation_recovers_polynomial(p):
    xs = list(range(-2, max(p.degree, 0) + 2))
    assert interpolate(xs, [p(Fraction(x)) for x in xs]) == p


def test_interpolation_rejects_repeated_nodes():
    with pytest.raises(ValueError):
        interpolate([1, 1], [2, 3])
