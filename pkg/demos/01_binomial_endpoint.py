"""The binomial series of (1 + x)^a at the edge of its disk, x = 1."""

# %%
from fractions import Fraction

from hypreg.binomial_endpoint import (
    binomial_partial_sum,
    endpoint_value,
    remainder,
    remainder_poly_in_k,
    series_magnitude_poly,
)
from hypreg.sumreg import AlternatingPolynomial, abel_sum, euler_transform_sum

# %%
# 1 - 1 + 1 - ... , 1 - 2 + 3 - ... , 1 - 3 + 6 - ...
# diverge classically but the closed form (1 + x)^a still makes sense at x = 1.
for a in (-1, -2, -3):
    print(f"(1 + 1)^{a} =", endpoint_value(a, 1))

# %%
# Two classical summation methods agree with it.
for m in (1, 2, 3):
    terms = AlternatingPolynomial(series_magnitude_poly(m))
    print(m, abel_sum(terms), euler_transform_sum(terms), sep="   ")

# %%
# Why: the truncation error R_k is exact, and at x = 1 it is
# (-1)^(k+1) P(k) / 2^m with P a polynomial of degree m - 1.
m, x = 3, Fraction(1)
for k in range(6):
    print(k, binomial_partial_sum(m, k, x), remainder(m, k, x))
print("P(k) =", remainder_poly_in_k(m))

# %%
# Partial sum plus remainder is always exactly (1 + x)^(-m), even far out.
k = 40
print(binomial_partial_sum(m, k, x) + remainder(m, k, x) == endpoint_value(-m, x))
