"""Command-line front end: ``hypreg classify|endpoint|remainder|sum|limit|zsum``.

Every command prints one record as JSON (default), CSV or text.  Exit codes:
0 success, 2 bad parameters, 3 numerical method failure.  Numeric tolerances
default to $HYPREG_TOLERANCE when that variable is set.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import click

from .binomial_endpoint import (
    RemainderQuery,
    binomial_partial_sum,
    endpoint_value,
    remainder,
    remainder_identity_check,
    remainder_poly_in_k,
    series_magnitude_poly,
)
from .errors import HypregError, NoStableLimitError, SingularSystemError, TerminatingSeriesError
from .exactnum import as_rational, format_rational
from .expressions import (
    N,
    ExpressionError,
    alternating_polynomial,
    parse_formula,
    parse_pi_multiple,
    sequence_from_formula,
)
from .hyperseries import HypergeometricParams, classify_point
from .sumreg import (
    AlternatingPolynomial,
    AlternatingTrigPoly,
    Method,
    RegularizedValue,
    abel_sum,
    alternating_series_value,
    cesaro_sum,
    euler_transform_sum,
    generalized_limit,
    trig_series_value,
)
from .sumreg.sequences import Shifted
from .zline import builtin_family, direct_sum, family_names, resolve_range, sum_over_range

EXIT_OK, EXIT_USAGE, EXIT_METHOD = 0, 2, 3
FORMATS = ("json", "csv", "text")


class ParameterError(click.ClickException):
    exit_code = EXIT_USAGE


def _num(v: float) -> float:
    """Round for display so that output is stable across runs."""
    v = float(f"{float(v):.12g}")
    return 0.0 if v == 0 else v


def _est(v: float) -> float:
    return float(f"{float(v):.3e}")


# -- output record ------------------------------------------------------------

@dataclass(frozen=True)
class OutputRecord:
    command: str
    inputs: dict
    result: dict
    exact: str | None = None
    table: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "result": self.result, "exact": self.exact}

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2) + "\n"
        if fmt == "csv":
            return self._csv()
        if fmt == "text":
            return self._text()
        raise ValueError(f"unknown format {fmt!r}")

    @classmethod
    def parse(cls, text: str) -> "OutputRecord":
        """Inverse of ``render('json')``."""
        data = json.loads(text)
        return cls(data["command"], data["inputs"], data["result"], data["exact"])

    def _rows(self) -> list[dict]:
        if self.table:
            return list(self.table)
        return [{k: v for k, v in self.result.items() if not isinstance(v, (list, dict))}]

    def _csv(self) -> str:
        rows = self._rows()
        header: list[str] = []
        for row in rows:
            header += [k for k in row if k not in header]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\r\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(row.get(k)) for k in header})
        return buf.getvalue()

    def _text(self) -> str:
        lines = [f"{self.command}: " + ", ".join(f"{k}={_cell(v)}" for k, v in self.inputs.items())]
        for k, v in self.result.items():
            if not isinstance(v, (list, dict)):
                lines.append(f"  {k}: {_cell(v)}")
        rows = self.table or next((v for v in self.result.values() if isinstance(v, list)), [])
        if rows:
            header = list(rows[0])
            cells = [header] + [[_cell(r.get(h)) for h in header] for r in rows]
            widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
            for c in cells:
                lines.append("  " + "  ".join(s.ljust(w) for s, w in zip(c, widths)).rstrip())
        if self.exact is not None:
            lines.append(f"  exact: {self.exact}")
        return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(_cell(x) for x in v)
    return str(v)


def load_schema() -> dict:
    return json.loads(resources.files("hypreg").joinpath("data/output.schema.json").read_text())


def _emit(record: OutputRecord, fmt: str, code: int = EXIT_OK):
    click.echo(record.render(fmt), nl=False)
    sys.exit(code)


def _value_entry(v: RegularizedValue) -> dict:
    return {
        "method": v.method.value,
        "status": "ok",
        "value": _num(v.value),
        "error_estimate": _est(v.error_estimate),
        "exact": None if v.exact is None else format_rational(v.exact),
        "message": None,
    }


def _failure_entry(method: Method, exc: Exception) -> dict:
    return {"method": method.value, "status": "failed", "value": None, "error_estimate": None, "exact": None, "message": str(exc)}


# -- shared options -----------------------------------------------------------

def common_options(func):
    func = click.option(
        "--max-depth", type=click.IntRange(1), default=None,
        help="Iteration budget: Abel grid exponent, Euler depth, Cesaro levels.",
    )(func)
    func = click.option(
        "--tolerance", type=click.FloatRange(min=0, min_open=True), default=None,
        help="Settling tolerance for numerical oracles (default: $HYPREG_TOLERANCE or built-in).",
    )(func)
    func = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)(func)
    return func


def _rational(text: str, what: str) -> Fraction:
    try:
        return as_rational(text.strip())
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParameterError(f"{what}: {exc}") from None


def _rational_list(text: str, what: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [_rational(t, what) for t in text.split(",")]


def _abel_kw(tolerance, max_depth) -> dict:
    kw = {"tolerance": tolerance}
    if max_depth is not None:
        kw["j_max"] = max_depth
    return kw


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact hypergeometric endpoint tools and regularized summation."""


# -- classify -----------------------------------------------------------------

@main.command()
@click.option("--upper", required=True, help="Comma-separated upper parameters, e.g. 1/2,1/2.")
@click.option("--lower", default="", help="Comma-separated lower parameters.")
@click.option("--x", "x_text", required=True, help="Evaluation point, a rational such as -1 or 1/2.")
@common_options
def classify(upper, lower, x_text, fmt, tolerance, max_depth):
    """Convergence verdict of a pFq series at x."""
    up, low = _rational_list(upper, "--upper"), _rational_list(lower, "--lower")
    x = _rational(x_text, "--x")
    try:
        params = HypergeometricParams(up, low)
        v = classify_point(params, x)
    except TerminatingSeriesError as exc:
        v = exc.verdict
    except (HypregError, ValueError) as exc:
        raise ParameterError(str(exc)) from None
    s = None if v.s is None else format_rational(v.s)
    record = OutputRecord(
        "classify",
        {"upper": [format_rational(a) for a in up], "lower": [format_rational(b) for b in low], "x": format_rational(x)},
        {"verdict": v.verdict.value, "rationale": v.rationale, "s": s},
        s,
    )
    _emit(record, fmt)


# -- endpoint -----------------------------------------------------------------

@main.command()
@click.option("-a", "a", type=int, required=True, help="Nonzero integer exponent.")
@click.option("-x", "x_text", default="1", show_default=True, help="Rational x in (-1, 1].")
@common_options
def endpoint(a, x_text, fmt, tolerance, max_depth):
    """(1 + x)^a exactly, cross-checked by Abel and Euler when a < 0 and x = 1."""
    x = _rational(x_text, "-x")
    try:
        value = endpoint_value(a, x)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    checks = []
    if a < 0 and x == 1:
        terms = AlternatingPolynomial(series_magnitude_poly(-a))
        for method, run in (
            (Method.ABEL_SUM, lambda: abel_sum(terms, **_abel_kw(tolerance, max_depth))),
            (Method.EULER, lambda: euler_transform_sum(terms, tolerance=tolerance, max_depth=max_depth)),
        ):
            try:
                got = run()
            except NoStableLimitError as exc:
                checks.append(_failure_entry(method, exc) | {"agrees": False})
                continue
            agrees = got.exact == value if got.exact is not None else abs(got.value - float(value)) <= got.error_estimate
            checks.append(_value_entry(got) | {"agrees": agrees})
    exact = format_rational(value)
    record = OutputRecord(
        "endpoint",
        {"a": a, "x": format_rational(x)},
        {"value": _num(value), "exact": exact, "cross_checks": checks},
        exact,
        table=tuple([{"method": "Exact", "status": "ok", "value": _num(value), "error_estimate": 0.0, "exact": exact, "message": None, "agrees": True}] + checks),
    )
    code = EXIT_METHOD if any(not c["agrees"] for c in checks) else EXIT_OK
    _emit(record, fmt, code)


# -- remainder ----------------------------------------------------------------

def _remainder_row(m: int, k: int, x: Fraction) -> dict:
    q = RemainderQuery(m, k, x)
    return {
        "k": k,
        "partial_sum": format_rational(binomial_partial_sum(q)),
        "remainder": format_rational(remainder(q)),
        "identity_ok": remainder_identity_check(q),
    }


@main.command("remainder")
@click.option("-m", "m", type=click.IntRange(1), required=True, help="Exponent of (1 + x)^-m.")
@click.option("--k-max", type=click.IntRange(0), default=10, show_default=True)
@click.option("-x", "x_text", default="1", show_default=True, help="Rational x in (-1, 1].")
@click.option("--plot-data", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Also write k vs |remainder| columns here, plus a .meta.json sidecar.")
@click.option("--jobs", type=click.IntRange(1), default=1, show_default=True, help="Worker threads for table rows.")
@common_options
def remainder_cmd(m, k_max, x_text, plot_data, jobs, fmt, tolerance, max_depth):
    """Table of partial sums and exact remainders of (1 + x)^-m."""
    x = _rational(x_text, "-x")
    if not -1 < x <= 1:
        raise ParameterError(f"x must lie in (-1, 1], got {format_rational(x)}")
    ks = range(k_max + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda k: _remainder_row(m, k, x), ks))
    else:
        rows = [_remainder_row(m, k, x) for k in ks]
    result = {"rows": rows}
    if x == 1:
        result["scaled_remainder_poly"] = str(remainder_poly_in_k(m))
    if plot_data is not None:
        lines = ["# k abs_remainder"]
        lines += [f"{r['k']} {abs(float(Fraction(r['remainder']))):.12g}" for r in rows]
        plot_data.write_text("\n".join(lines) + "\n", encoding="utf-8")
        meta = {
            "command": "remainder",
            "m": m,
            "x": format_rational(x),
            "k_max": k_max,
            "columns": ["k", "abs_remainder"],
            "description": f"|R_k^{m}(x)| after truncating (1 + x)^-{m} at index k",
        }
        Path(str(plot_data) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    record = OutputRecord("remainder", {"m": m, "k_max": k_max, "x": format_rational(x)}, result, table=tuple(rows))
    _emit(record, fmt)


# -- sum ----------------------------------------------------------------------

METHOD_NAMES = {"abel": Method.ABEL_SUM, "euler": Method.EULER, "cesaro": Method.CESARO, "symbolic": Method.SYMBOLIC}


def _parse_trig(text: str) -> AlternatingTrigPoly:
    fields = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        if not sep:
            raise ParameterError(f"--trig expects m=<int>,theta=<angle>, got {text!r}")
        fields[key.strip()] = val.strip()
    if set(fields) != {"m", "theta"}:
        raise ParameterError(f"--trig expects keys m and theta, got {sorted(fields)}")
    try:
        m = int(fields["m"])
        theta, frac = parse_pi_multiple(fields["theta"])
        if frac is not None:
            return AlternatingTrigPoly.pi_multiple(m, frac)
        return AlternatingTrigPoly(m, theta)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None


@main.command("sum")
@click.option("--alt-poly", default=None, help="Series sum_n (-1)^n p(n) for the polynomial p, e.g. \"n+1\".")
@click.option("--expr", default=None, help="Series sum_n t(n) for a term formula in n.")
@click.option("--trig", default=None, help="Series sum_u (-1)^(u-1) u^(2m-1) sin(u theta), e.g. \"m=1,theta=pi/2\".")
@click.option("--start", type=int, default=0, show_default=True, help="First index for --alt-poly and --expr.")
@click.option("--methods", default="abel,euler", show_default=True, help="Any of abel,euler,cesaro,symbolic.")
@click.option("--cesaro-order", type=click.IntRange(0), default=1, show_default=True)
@common_options
def sum_cmd(alt_poly, expr, trig, start, methods, cesaro_order, fmt, tolerance, max_depth):
    """Regularized value of a series under each requested method."""
    if sum(v is not None for v in (alt_poly, expr, trig)) != 1:
        raise ParameterError("give exactly one of --alt-poly, --expr, --trig")
    wanted = [m.strip() for m in methods.split(",") if m.strip()]
    unknown = [m for m in wanted if m not in METHOD_NAMES]
    if unknown or not wanted:
        raise ParameterError(f"unknown methods {unknown}; choose from {sorted(METHOD_NAMES)}")

    try:
        if alt_poly is not None:
            p = alternating_polynomial((-1) ** N * parse_formula(alt_poly))
            if p is None:
                raise ParameterError(f"--alt-poly {alt_poly!r} is not a polynomial with rational coefficients")
            terms = AlternatingPolynomial(p)
            inputs = {"alt_poly": str(p), "start": start}
        elif expr is not None:
            terms = sequence_from_formula(expr)
            inputs = {"expr": expr, "start": start}
        else:
            terms = _parse_trig(trig)
            inputs = {"trig": {"m": terms.m, "theta": trig.partition("theta=")[2].split(",")[0].strip()}}
            start = 0  # the n = 0 term vanishes, so this is the sum from u = 1
    except ExpressionError as exc:
        raise ParameterError(str(exc)) from None
    if start:
        terms = terms.shifted(start) if isinstance(terms, AlternatingPolynomial) else Shifted(terms, start)
    inputs["methods"] = wanted

    def symbolic():
        if isinstance(terms, AlternatingPolynomial):
            return alternating_series_value(terms.poly)
        if isinstance(terms, AlternatingTrigPoly):
            return trig_series_value(terms.m, terms.theta)
        raise NoStableLimitError("no symbolic telescoper for this term family", method=Method.SYMBOLIC)

    runners = {
        "abel": lambda: abel_sum(terms, **_abel_kw(tolerance, max_depth)),
        "euler": lambda: euler_transform_sum(terms, tolerance=tolerance, max_depth=max_depth),
        "cesaro": lambda: cesaro_sum(terms, cesaro_order, tolerance=tolerance, max_depth=max_depth),
        "symbolic": symbolic,
    }
    entries = []
    for name in wanted:
        try:
            entries.append(_value_entry(runners[name]()))
        except (NoStableLimitError, SingularSystemError, ZeroDivisionError) as exc:
            entries.append(_failure_entry(METHOD_NAMES[name], exc))
    exacts = {e["exact"] for e in entries if e["exact"] is not None}
    record = OutputRecord("sum", inputs, {"values": entries}, exacts.pop() if len(exacts) == 1 else None, table=tuple(entries))
    _emit(record, fmt, EXIT_OK if any(e["status"] == "ok" for e in entries) else EXIT_METHOD)


# -- limit --------------------------------------------------------------------

@main.command("limit")
@click.option("--seq", "seq_text", required=True, help="Sequence formula in n, e.g. \"(-1)^n*(2n+1)^3\".")
@common_options
def limit_cmd(seq_text, fmt, tolerance, max_depth):
    """Generalized limit of F(1), F(2), ..."""
    try:
        seq = sequence_from_formula(seq_text)
    except ExpressionError as exc:
        raise ParameterError(str(exc)) from None
    inputs = {"seq": seq_text}
    try:
        v = generalized_limit(seq, **_abel_kw(tolerance, max_depth))
    except (NoStableLimitError, ZeroDivisionError) as exc:
        entry = _failure_entry(Method.ABEL_MEAN, exc)
        _emit(OutputRecord("limit", inputs, entry, None), fmt, EXIT_METHOD)
    entry = _value_entry(v)
    _emit(OutputRecord("limit", inputs, entry, entry["exact"]), fmt)


# -- zsum ---------------------------------------------------------------------

@main.command()
@click.option("--f", "family", required=True, help="Builtin summand family: constant, identity, square, cube, alternating.")
@click.option("-a", "a", type=int, required=True)
@click.option("-b", "b", type=int, required=True)
@common_options
def zsum(family, a, b, fmt, tolerance, max_depth):
    """F(b+1) - F(a), the sum of f over the reordered-integer range Z_{a,b}."""
    if family not in family_names():
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(family_names())}")
    g = builtin_family(family)
    rng = resolve_range(a, b)
    value = sum_over_range(g, a, b)
    direct = direct_sum(g, rng) if rng.finite else None
    check = "n/a" if direct is None else ("ok" if direct == value else "mismatch")
    exact = format_rational(value)
    result = {
        "value": exact,
        "range": rng.describe(),
        "finite": rng.finite,
        "direct_sum": None if direct is None else format_rational(direct),
        "cross_check": check,
    }
    _emit(OutputRecord("zsum", {"f": family, "a": a, "b": b}, result, exact), fmt, EXIT_METHOD if check == "mismatch" else EXIT_OK)


if __name__ == "__main__":
    main()
