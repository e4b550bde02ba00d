"""Where does a pFq series converge?"""

# %%
from hypreg.hyperseries import HypergeometricParams, classify_point, partial_sum

# %%
# Everything at |x| = 1 hangs on s = sum(lower) - sum(upper).
cases = {
    "s = 1/2": HypergeometricParams(["1/4", "1/4"], [1]),
    "s = 0": HypergeometricParams(["1/2", "1/2"], [1]),
    "s = -2": HypergeometricParams([2, 1], [1]),
}
for label, params in cases.items():
    for x in (1, -1):
        v = classify_point(params, x)
        print(f"{label:8s} x={x:+d}  {v.verdict.value:24s} {v.rationale}")

# %%
# Conditional convergence at x = -1 is slow; partial sums of 2F1(1/2, 1/2; 1; -1).
params = cases["s = 0"]
for N in (10, 100, 1000):
    print(N, float(partial_sum(params, -1, N)))

# %%
# Inside the disk the ratio test decides, and terminating series are polynomials.
print(classify_point(params, "1/2").rationale)
print(classify_point(HypergeometricParams([-3, 1], [2]), 7).rationale)
