"""Divergent series and sequences, summed three ways."""

# %%
from fractions import Fraction

from hypreg.exactnum import Polynomial
from hypreg.sumreg import (
    AlternatingPolynomial,
    AlternatingTrigPoly,
    Explicit,
    abel_mean_limit,
    abel_sum,
    alternating_series_value,
    cesaro_sum,
    euler_transform_sum,
    generalized_limit,
    trig_series_value,
)
from hypreg.errors import NoStableLimitError

# %%
# 1 - 2 + 3 - 4 + ... : Abel and Euler agree on 1/4, (C,1) does not settle.
terms = AlternatingPolynomial(Polynomial((1, 1)))
print(abel_sum(terms))
print(euler_transform_sum(terms))
try:
    cesaro_sum(terms, order=1)
except NoStableLimitError as exc:
    print("(C,1):", exc)
print("(C,2):", cesaro_sum(terms, order=2))

# %%
# The telescoper gives the same value symbolically.
print(alternating_series_value(Polynomial((1, 1))))

# %%
# sum (-1)^(u-1) u sin(u pi/2) = 1 - 3 + 5 - 7 + ... is 0.
print(trig_series_value(1, 3.141592653589793 / 2))
print(abel_sum(AlternatingTrigPoly.pi_multiple(1, Fraction(1, 2))))

# %%
# Generalized limits: (-1)^n (2n + 1)^3 has limit 0, 1 - 1/n has limit 1.
p = Polynomial((1, 2)) * Polynomial((1, 2)) * Polynomial((1, 2))
print(generalized_limit(AlternatingPolynomial(p)))
print(abel_mean_limit(AlternatingPolynomial(p)))
print(generalized_limit(Explicit(lambda n: 1 - Fraction(1, n), is_exact=True)))

# %%
# Regularity: convergent series keep their classical sums.
harmonic = Explicit(lambda n: Fraction((-1) ** n, n + 1), is_exact=True)
for method in (abel_sum, euler_transform_sum, cesaro_sum):
    print(method(harmonic))
