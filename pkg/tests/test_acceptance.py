"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[PASS]`` or ``[FAIL]`` line, visible even under
pytest's output capture.  Run alone with ``pytest tests/test_acceptance.py``.
"""

import itertools
import json
import random
import shlex
import sys
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest
from click.testing import CliRunner

from hypreg.binomial_endpoint import (
    binomial_partial_sum,
    endpoint_value,
    remainder,
    remainder_poly_in_k,
    series_magnitude_poly,
)
from hypreg.cli import main
from hypreg.errors import NoStableLimitError
from hypreg.exactnum import Polynomial
from hypreg.hyperseries import HypergeometricParams, Verdict, classify_endpoint
from hypreg.sumreg import (
    AlternatingPolynomial,
    AlternatingTrigPoly,
    Explicit,
    Method,
    abel_mean_limit,
    abel_sum,
    cesaro_sum,
    euler_transform_sum,
    find_trig_telescoper,
    generalized_limit,
    symmetric_sum,
)
from hypreg.zline import builtin_family, direct_sum, family_names, precedes, resolve_range, sum_over_range, zsorted

sys.path.insert(0, str(Path(__file__).parent))
from test_cli import CASES, GOLDEN  # noqa: E402

EXIT_2 = ["endpoint -a 0", "endpoint -a -1 -x 2", "zsum --f nope -a 1 -b 2", "sum --alt-poly n --methods borel"]
EXIT_3 = ["limit --seq n", "limit --seq 2^n", "sum --expr n --methods abel,euler,cesaro"]


def report(capsys, number, title, body):
    try:
        detail = body()
    except BaseException as exc:
        with capsys.disabled():
            print(f"\n[FAIL] criterion {number}: {title} -- {type(exc).__name__}: {exc}")
        raise
    with capsys.disabled():
        print(f"\n[PASS] criterion {number}: {title}" + (f" -- {detail}" if detail else ""))


def cli(args, env=None):
    return CliRunner().invoke(main, shlex.split(args), env=env, catch_exceptions=False)


def worked_examples():
    for a, expected in ((-1, Fraction(1, 2)), (-2, Fraction(1, 4)), (-3, Fraction(1, 8))):
        assert endpoint_value(a, 1) == expected
        series = AlternatingPolynomial(series_magnitude_poly(-a))
        abel = abel_sum(series, tolerance=1e-8)
        assert abs(abel.value - float(expected)) <= 1e-8, abel
        euler = euler_transform_sum(series)
        assert euler.exact == expected, euler
        result = cli(f"endpoint -a {a} -x 1")
        assert result.exit_code == 0, result.output
        record = json.loads(result.stdout)
        assert record["exact"] == str(expected)
    return "1/2, 1/4, 1/8 exact; Abel within 1e-8; Euler exact; CLI agrees"


def remainder_identity():
    count = 0
    for m, k, x in itertools.product(range(1, 7), range(41), map(Fraction, ("-1/2", "1/3", "9/10", "1"))):
        assert binomial_partial_sum(m, k, x) + remainder(m, k, x) == 1 / (1 + x) ** m, (m, k, x)
        count += 1
    return f"{count} exact identities"


def degree_claim():
    rng = random.Random(20261019)
    for m in range(1, 7):
        poly = remainder_poly_in_k(m)
        assert poly.degree == m - 1
        for k in rng.sample(range(41, 500), 20):
            assert poly(k) == remainder(m, k, 1) * (-1) ** (k + 1) * 2 ** m, (m, k)
    return "degrees 0..5, 20 fresh k each"


def alternating_polynomial_limits():
    rng = random.Random(7)
    polys = []
    for _ in range(50):
        degree = rng.randint(0, 6)
        coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        polys.append(Polynomial(coeffs))
    polys += [_power(Polynomial((1, 2)), k) for k in range(1, 6)]  # (2n+1)^k
    worst = 0.0
    for p in polys:
        seq = AlternatingPolynomial(p)
        symbolic = generalized_limit(seq)
        assert symbolic.method is Method.SYMBOLIC and symbolic.exact == 0, (p, symbolic)
        abel = abel_mean_limit(seq, tolerance=1e-6)
        assert abs(abel.value) <= 1e-6, (p, abel)
        worst = max(worst, abs(abel.value))
    return f"{len(polys)} polynomials, worst Abel |limit| {worst:.1e}"


def _power(p, k):
    out = Polynomial.constant(1)
    for _ in range(k):
        out = out * p
    return out


def sine_identity():
    worst_value = worst_residual = 0.0
    for m in (1, 2):
        for theta in ("pi/2", 1, -2):
            spec = AlternatingTrigPoly.pi_multiple(m, Fraction(1, 2)) if theta == "pi/2" else AlternatingTrigPoly(m, theta)
            abel = abel_sum(spec, tolerance=1e-6)
            assert abs(abel.value) <= 1e-6, (m, theta, abel)
            worst_value = max(worst_value, abs(abel.value))
            tel = find_trig_telescoper(m, spec.theta)
            residual = max(abs(tel.residual(n)) for n in range(16))
            assert residual < 1e-10, (m, theta, residual)
            worst_residual = max(worst_residual, residual)
    return f"worst Abel |sum| {worst_value:.1e}, worst residual {worst_residual:.1e}"


def _rule(upper, lower, x):
    s = sum(lower, Fraction(0)) - sum(upper, Fraction(0))
    if s > 0:
        return Verdict.ABSOLUTELY_CONVERGENT
    if s <= -1:
        return Verdict.DIVERGENT
    return Verdict.CONDITIONALLY_CONVERGENT if x == -1 else Verdict.DIVERGENT


def endpoint_classifier():
    examples = [
        (([Fraction(1, 4), Fraction(1, 4)], [1]), 1, Verdict.ABSOLUTELY_CONVERGENT),
        (([Fraction(1, 2), Fraction(1, 2)], [1]), -1, Verdict.CONDITIONALLY_CONVERGENT),
        (([2, 1], [1]), -1, Verdict.DIVERGENT),
    ]
    for (upper, lower), x, verdict in examples:
        assert classify_endpoint(HypergeometricParams(upper, lower), x).verdict is verdict

    rng = random.Random(11)

    def param():
        while True:
            q = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
            if not (q.denominator == 1 and q <= 0):
                return q

    for _ in range(20):
        q = rng.randint(0, 3)
        upper, lower = [param() for _ in range(q + 1)], [param() for _ in range(q)]
        x = rng.choice((-1, 1))
        got = classify_endpoint(HypergeometricParams(upper, lower), x).verdict
        assert got is _rule(upper, lower, x), (upper, lower, x)
    return "3 branch examples, 20 random parameter sets"


def reordered_line():
    assert zsorted(range(-5, 6)) == [0, 1, 2, 3, 4, 5, -5, -4, -3, -2, -1]

    def key(a):  # 0 first, then -1/a increasing
        return (0, 0) if a == 0 else (1, Fraction(-1, a))

    rng = random.Random(3)
    for _ in range(10_000):
        a, b, c = (rng.randint(-50, 50) for _ in range(3))
        assert not precedes(a, a)
        assert precedes(a, b) == (key(a) < key(b))
        assert not (precedes(a, b) and precedes(b, a))
        assert a == b or precedes(a, b) or precedes(b, a)
        if precedes(a, b) and precedes(b, c):
            assert precedes(a, c)
    checked = 0
    for name in family_names():
        g = builtin_family(name)
        for a, b in itertools.product(range(-6, 7), repeat=2):
            rng_ab = resolve_range(a, b)
            if rng_ab.finite:
                assert sum_over_range(g, a, b) == direct_sum(g, rng_ab), (name, a, b)
                checked += 1
    assert sum_over_range(builtin_family("identity"), -2, 1) == -2
    return f"10^4 triples, {checked} finite ranges, Z_(-2,1) identity sum = -2"


EVEN_FUNCTIONS = [
    lambda x: Fraction(x * x + 1),
    lambda x: Fraction(x ** 4 - 3 * x * x + 2),
    lambda x: Fraction(1, x * x + 1),
    lambda x: Fraction(abs(x) + 7),
    lambda x: Fraction((-1) ** abs(x) * 3),
]


def symmetry_formula():
    f = AlternatingPolynomial(Polynomial((-1, 2)))  # (-1)^x (2x - 1)
    value = symmetric_sum(f, epsilon=-1, t=1)
    assert value.exact == 0, value
    terms = Explicit(lambda n: 0 if n == 0 else Fraction((-1) ** n * (2 * n - 1)), is_exact=True)
    abel = abel_sum(terms, tolerance=1e-8)
    assert abs(abel.value - 0) <= 1e-8, abel
    for mu in EVEN_FUNCTIONS:
        got = symmetric_sum(Explicit(mu, is_exact=True), epsilon=0)
        assert got.exact == -mu(0) / 2, got
    return f"odd example 0, Abel {abel.value:.1e}; 5 even functions give -f(0)/2"


CONVERGENT = [
    ("geometric 1/2", lambda n: Fraction(1, 2 ** n), 2),
    ("geometric -1/2", lambda n: Fraction(-1, 2) ** n, mpmath.mpf(2) / 3),
    ("geometric 1/3", lambda n: Fraction(1, 3 ** n), mpmath.mpf(3) / 2),
    ("geometric -2/3", lambda n: Fraction(-2, 3) ** n, mpmath.mpf(3) / 5),
    ("n/2^n", lambda n: Fraction(n, 2 ** n), 2),
    ("p-series p=2", lambda n: Fraction(1, (n + 1) ** 2), mpmath.pi ** 2 / 6),
    ("alternating harmonic", lambda n: Fraction((-1) ** n, n + 1), mpmath.log(2)),
    ("alternating p=2", lambda n: Fraction((-1) ** n, (n + 1) ** 2), mpmath.pi ** 2 / 12),
    ("Leibniz", lambda n: Fraction((-1) ** n, 2 * n + 1), mpmath.pi / 4),
    ("1/((n+1)(n+2))", lambda n: Fraction(1, (n + 1) * (n + 2)), 1),
]


def regularity():
    methods = [
        ("Abel", abel_sum),
        ("Euler", euler_transform_sum),
        ("Cesaro (C,0)", lambda s: cesaro_sum(s, order=0)),
        ("Cesaro (C,1)", lambda s: cesaro_sum(s, order=1)),
    ]
    settled = 0
    with mpmath.workdps(40):
        for name, term, classical in CONVERGENT:
            spec = Explicit(term, description=name, is_exact=True)
            hits = 0
            for label, method in methods:
                try:
                    result = method(spec)
                except NoStableLimitError:
                    continue
                if result.exact is not None:
                    err = abs(mpmath.mpf(result.exact.numerator) / result.exact.denominator - classical)
                else:
                    err = abs(mpmath.mpf(result.value) - classical)
                assert err <= result.error_estimate, (name, label, result, float(err))
                hits += 1
            assert hits, f"no method settled on {name}"
            settled += hits
    return f"{len(CONVERGENT)} series, {settled} settling method results all within their estimates"


def cli_contract():
    for name, cmd in CASES:
        for fmt in ("json", "csv"):
            result = cli(f"{cmd} --format {fmt}")
            assert result.exit_code == 0, (cmd, result.output)
            assert result.stdout_bytes == (GOLDEN / f"{name}.{fmt}").read_bytes(), (name, fmt)
    for cmd in EXIT_2:
        assert cli(cmd).exit_code == 2, cmd
    for cmd in EXIT_3:
        assert cli(cmd).exit_code == 3, cmd
    return f"{2 * len(CASES)} golden files byte-identical; exit codes 0/2/3"


CRITERIA = [
    (1, "worked endpoint examples", worked_examples),
    (2, "exact remainder identity", remainder_identity),
    (3, "remainder is a polynomial of degree m-1 in k", degree_claim),
    (4, "alternating polynomial limits vanish", alternating_polynomial_limits),
    (5, "alternating sine series and trig telescoper", sine_identity),
    (6, "endpoint convergence classifier", endpoint_classifier),
    (7, "reordered integer line and range sums", reordered_line),
    (8, "reflection-symmetry summation formula", symmetry_formula),
    (9, "regularity on convergent series", regularity),
    (10, "CLI golden outputs and exit codes", cli_contract),
]


@pytest.mark.parametrize("number, title, body", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, body, capsys):
    report(capsys, number, title, body)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
