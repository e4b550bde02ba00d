import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from hypreg.errors import SymmetryError
from hypreg.exactnum import Polynomial
from hypreg.sumreg import (
    AlternatingPolynomial,
    AlternatingTrigPoly,
    EvenElementary,
    Explicit,
    Method,
    abel_sum,
    alternating_series_value,
    euler_transform_sum,
    find_alternating_telescoper,
    find_trig_telescoper,
    generalized_limit,
    symmetric_sum,
    trig_series_value,
    verify_even_alternating_limit,
)

F = Fraction
polys = st.lists(rationals(20, 6), max_size=7).map(Polynomial)


def sgn(n):
    return 1 if n % 2 == 0 else -1


# -- polynomial telescoper ----------------------------------------------------

def test_alternating_telescoper_examples():
    assert find_alternating_telescoper(Polynomial((1,))) == Polynomial((F(-1, 2),))
    assert find_alternating_telescoper(Polynomial((0, 1))) == Polynomial((F(1, 4), F(-1, 2)))


@given(polys)
def test_telescoper_difference_identity(p):
    q = find_alternating_telescoper(p)
    assert q.degree == p.degree
    for n in range(-5, 15):
        assert sgn(n + 1) * q(F(n + 1)) - sgn(n) * q(F(n)) == sgn(n) * p(F(n))


@given(polys, st.integers(0, 6))
def test_series_value_matches_exact_euler_transform(p, start):
    series = AlternatingPolynomial(p).shifted(start)
    assert alternating_series_value(p, start).exact == euler_transform_sum(series).exact


def test_series_values_of_worked_examples():
    assert alternating_series_value(Polynomial((1,))).exact == F(1, 2)
    assert alternating_series_value(Polynomial((1, 1))).exact == F(1, 4)
    assert alternating_series_value(Polynomial((1, F(3, 2), F(1, 2)))).exact == F(1, 8)


# -- trig telescoper ----------------------------------------------------------

def test_trig_telescoper_identity_quarter_turn():
    tel = find_trig_telescoper(1, math.pi / 2)
    for n in range(10):
        assert abs(tel(n + 1) - tel(n) - sgn(n - 1) * n * math.sin(n * math.pi / 2)) < 1e-12


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("theta", [math.pi / 2, 1.0, -2.0, 3.0, 0.1])
def test_trig_telescoper_residual_and_value(m, theta):
    tel = find_trig_telescoper(m, theta)
    assert len(tel.beta) == m and len(tel.beta_bar) == m
    assert max(abs(tel.residual(n)) for n in range(16)) < 1e-10
    v = trig_series_value(m, theta)
    assert abs(v.value) <= v.error_estimate


def test_trig_value_agrees_with_abel():
    v = abel_sum(AlternatingTrigPoly.pi_multiple(1, F(1, 2)))
    assert abs(v.value) <= 1e-8


@pytest.mark.parametrize("theta", [0.0, math.pi, -4.0])
def test_trig_angle_range(theta):
    with pytest.raises(ValueError):
        find_trig_telescoper(1, theta)


def test_trig_family_values():
    s = AlternatingTrigPoly(2, 1.0)
    assert s(3) == pytest.approx(27 * math.sin(3.0))
    assert AlternatingTrigPoly.pi_multiple(1, F(1, 2))(1) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        AlternatingTrigPoly.pi_multiple(1, F(3, 2))


# -- generalized limits -------------------------------------------------------

def test_generalized_limit_examples():
    v = generalized_limit(AlternatingPolynomial(Polynomial((2, -1, 0, 5))))
    assert v.exact == 0 and v.method is Method.SYMBOLIC
    for k in range(7):
        assert generalized_limit(AlternatingPolynomial(Polynomial.monomial(k))).exact == 0
    c = generalized_limit(Explicit(lambda n: F(7, 3), is_exact=True))
    assert abs(c.value - 7 / 3) <= 1e-12


@given(polys)
def test_alternating_polynomial_limits_vanish(p):
    assert generalized_limit(AlternatingPolynomial(p)).exact == 0


def test_abel_path_limits_of_odd_powers():
    for k in range(1, 6):
        p = Polynomial((1, 2))
        q = Polynomial((1,))
        for _ in range(k):
            q = q * p
        seq = Explicit(lambda n, q=q: sgn(n) * q(F(n)), is_exact=True)
        v = generalized_limit(seq)
        assert v.method is Method.ABEL_MEAN
        assert abs(v.value) <= 1e-6


# -- symmetry formula ---------------------------------------------------------

def f_odd_gap(x):
    return sgn(x) * (2 * x - 1)


def test_symmetric_sum_worked_example():
    v = symmetric_sum(AlternatingPolynomial(Polynomial((-1, 2))), epsilon=-1, t=1)
    assert v.exact == 0 and v.method is Method.SYMMETRY
    w = symmetric_sum(Explicit(f_odd_gap, is_exact=True), epsilon=-1, t=1)
    assert abs(w.value) <= 1e-8
    a = abel_sum(Explicit(f_odd_gap, is_exact=True).shifted(1))
    assert abs(a.value - float(v.exact)) <= 1e-8


EVEN = [
    (lambda x: 1, F(-1, 2)),
    (lambda x: x * x, 0),
    (lambda x: x**4 + 3, F(-3, 2)),
    (lambda x: sgn(x), F(-1, 2)),
    (lambda x: sgn(x) * x * x, 0),
]


@pytest.mark.parametrize("f, expected", EVEN)
def test_even_case_is_minus_half_f0(f, expected):
    assert symmetric_sum(Explicit(f, is_exact=True), epsilon=0).exact == expected


def test_even_case_agrees_with_abel_where_it_settles():
    for f, expected in EVEN[3:]:
        a = abel_sum(Explicit(f, is_exact=True).shifted(1))
        assert abs(a.value - float(expected)) <= 1e-8


@pytest.mark.parametrize(
    "coeffs, epsilon, t",
    [((1, 2), 1, 1), ((1, -2, 1), -1, 2), ((4, 2, 1), 1, 2), ((1, 2, 1), 1, 2)],
)
def test_symmetric_sum_agrees_with_telescoper(coeffs, epsilon, t):
    # (-1)^x p(x) with p chosen so that the reflection symmetry holds
    f = AlternatingPolynomial(Polynomial(coeffs))
    for x in range(-6, 7):
        assert f(-x) == f(x - epsilon * t)
    v = symmetric_sum(f, epsilon, t)
    assert v.exact == alternating_series_value(f.poly, start=1).exact


def test_symmetry_violation_names_the_point():
    with pytest.raises(SymmetryError) as info:
        symmetric_sum(Explicit(lambda x: x, is_exact=True), epsilon=0)
    assert info.value.x is not None


def test_symmetric_sum_argument_checks():
    f = Explicit(lambda x: 1, is_exact=True)
    with pytest.raises(ValueError):
        symmetric_sum(f, epsilon=2)
    with pytest.raises(ValueError):
        symmetric_sum(f, epsilon=1, t=0)


# -- even elementary sequences ------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3])
def test_even_power_sequences(m):
    assert verify_even_alternating_limit(lambda x: (2 * x) ** (2 * m), t=1, epsilon=1)


def test_even_constant_and_shifted_window():
    assert verify_even_alternating_limit(lambda x: 1, t=1, epsilon=1)
    assert verify_even_alternating_limit(lambda x: x * x + 1, t=2, epsilon=-1)


def test_non_even_mu_rejected():
    with pytest.raises(SymmetryError):
        verify_even_alternating_limit(lambda x: x, t=1, epsilon=1)


def test_even_elementary_arguments():
    s = EvenElementary(lambda x: x * x, t=2, epsilon=-1)
    assert s.delta == 1
    assert s.arguments(3) == [F(3), F(4)]
    assert s(3) == -(9 + 16)
    assert EvenElementary(lambda x: 1, t=3, epsilon=1).arguments(0) == [F(3, 2), F(1, 2), F(-1, 2)]
