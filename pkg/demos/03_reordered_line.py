"""Sums over ranges of the reordered integer line 0, 1, 2, ..., -2, -1."""

# %%
from hypreg.zline import builtin_family, direct_sum, resolve_range, sum_over_range, zsorted

# %%
print(zsorted(range(-5, 6)))

# %%
# With 0 first and negatives last, Z_(a,b) for b before a wraps around the far end.
for a, b in ((1, 4), (-3, -1), (-2, 1), (3, 3), (1, -1)):
    print((a, b), resolve_range(a, b).describe())

# %%
# F(b + 1) - F(a) agrees with the direct sum on every finite range...
g = builtin_family("identity")
for a, b in ((1, 4), (-3, -1), (-2, 1)):
    print((a, b), sum_over_range(g, a, b), direct_sum(g, resolve_range(a, b)))

# %%
# ... and assigns values to the infinite ones: 1 + 2 + 3 + ... + (-2) + (-1).
print(sum_over_range(g, 1, -1))
print(sum_over_range(builtin_family("square"), 0, -1))
