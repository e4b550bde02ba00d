"""Summing f over u >= 1 when f is symmetric about a point."""

# %%
from fractions import Fraction

from hypreg.exactnum import Polynomial
from hypreg.sumreg import AlternatingPolynomial, Explicit, abel_sum, symmetric_sum, verify_even_alternating_limit

# %%
# Even f (epsilon = 0): the sum is -f(0)/2, so 1 + 1 + 1 + ... = -1/2.
print(symmetric_sum(Explicit(lambda x: Fraction(1), is_exact=True), epsilon=0))
print(symmetric_sum(Explicit(lambda x: Fraction(x * x + 1), is_exact=True), epsilon=0))

# %%
# f(x) = (-1)^x (2x - 1) satisfies f(-x) = f(x + 1): epsilon = -1, t = 1.
f = AlternatingPolynomial(Polynomial((-1, 2)))
print(symmetric_sum(f, epsilon=-1, t=1))
print(abel_sum(Explicit(lambda n: 0 if n == 0 else f(n), is_exact=True)))

# %%
# The limit term vanishes because (-1)^n times an even function of n + 1/2 has limit 0.
print(verify_even_alternating_limit(lambda x: x * x))
