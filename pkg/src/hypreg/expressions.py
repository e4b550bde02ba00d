"""Term and sequence descriptors written as formulas in n.

Formulas are parsed with sympy (``^`` and implicit multiplication such as
``2n`` are accepted) and compiled once into a Python closure.  The closure
returns exact ``Fraction`` values while only rational operations are
involved and switches to ``gmpy2.mpfr`` at the current context precision as
soon as a transcendental function appears.
"""

from __future__ import annotations

import math
from fractions import Fraction
from tokenize import TokenError
from typing import Callable

import gmpy2
import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from .exactnum import Polynomial, generalized_binomial
from .sumreg.sequences import AlternatingPolynomial, Explicit, SequenceSpec, to_mpfr

__all__ = ["ExpressionError", "compile_term", "parse_formula", "parse_pi_multiple", "sequence_from_formula"]

N = sp.Symbol("n", integer=True)
_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)
_FLOAT_FUNCS = {
    sp.sin: gmpy2.sin,
    sp.cos: gmpy2.cos,
    sp.tan: gmpy2.tan,
    sp.exp: gmpy2.exp,
    sp.log: gmpy2.log,
    sp.atan: gmpy2.atan,
}


class ExpressionError(ValueError):
    pass


def parse_formula(text: str, variables=(N,)) -> sp.Expr:
    local = {str(v): v for v in variables}
    local.update(pi=sp.pi, E=sp.E)
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS, evaluate=True)
    except (SyntaxError, TypeError, sp.SympifyError, TokenError) as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from None
    if not isinstance(expr, sp.Expr):
        raise ExpressionError(f"{text!r} is not an arithmetic expression")
    if expr.has(sp.Float):
        raise ExpressionError(f"decimal literals are not accepted: {text!r}; write p/q")
    stray = expr.free_symbols - set(variables)
    if stray:
        raise ExpressionError(f"unknown symbols {sorted(map(str, stray))} in {text!r}")
    return expr


def _power(base, exponent):
    if isinstance(exponent, Fraction) and exponent.denominator == 1:
        exponent = int(exponent)
    if isinstance(exponent, int) and isinstance(base, (int, Fraction)):
        if exponent >= 0:
            return Fraction(base) ** exponent
        if base == 0:
            raise ZeroDivisionError("0 raised to a negative power")
        return 1 / Fraction(base) ** -exponent
    if isinstance(exponent, int):
        return base ** exponent
    return to_mpfr(base) ** to_mpfr(exponent)


def compile_term(expr: sp.Expr, var: sp.Symbol = N) -> Callable[[int], object]:
    """Closure n -> value of ``expr``; exact when the arithmetic allows."""
    if expr == var:
        return lambda k: k
    if expr.is_Integer:
        c = int(expr)
        return lambda k: c
    if expr.is_Rational:
        c = Fraction(int(expr.p), int(expr.q))
        return lambda k: c
    if expr is sp.pi:
        return lambda k: gmpy2.const_pi()
    if expr is sp.E:
        return lambda k: gmpy2.exp(1)
    if isinstance(expr, sp.Add):
        parts = [compile_term(a, var) for a in expr.args]
        return lambda k: sum(f(k) for f in parts)
    if isinstance(expr, sp.Mul):
        parts = [compile_term(a, var) for a in expr.args]

        def product(k):
            acc = 1
            for f in parts:
                acc = acc * f(k)
            return acc

        return product
    if isinstance(expr, sp.Pow):
        fb, fe = compile_term(expr.base, var), compile_term(expr.exp, var)
        return lambda k: _power(fb(k), fe(k))
    if isinstance(expr, sp.binomial):
        fa, fu = (compile_term(a, var) for a in expr.args)
        return lambda k: generalized_binomial(fa(k), int(fu(k)))
    if isinstance(expr, sp.factorial):
        (fa,) = (compile_term(a, var) for a in expr.args)
        return lambda k: math.factorial(int(fa(k)))
    if isinstance(expr, sp.Abs):
        (fa,) = (compile_term(a, var) for a in expr.args)
        return lambda k: abs(fa(k))
    for func, impl in _FLOAT_FUNCS.items():
        if isinstance(expr, func):
            (fa,) = (compile_term(a, var) for a in expr.args)
            return lambda k, impl=impl, fa=fa: impl(to_mpfr(fa(k)))
    raise ExpressionError(f"unsupported operation {expr.func.__name__} in {expr}")


def alternating_polynomial(expr: sp.Expr, var: sp.Symbol = N) -> Polynomial | None:
    """p when ``expr`` equals (-1)^n p(n) with p a rational polynomial, else None."""
    q = sp.expand(sp.powsimp(expr * (-1) ** var))
    if not q.is_polynomial(var):
        return None
    coeffs = sp.Poly(q, var).all_coeffs()[::-1]
    if not all(c.is_Rational for c in coeffs):
        return None
    return Polynomial([Fraction(int(c.p), int(c.q)) for c in coeffs])


def sequence_from_formula(text: str) -> SequenceSpec:
    """AlternatingPolynomial when the formula has that shape, else Explicit."""
    expr = parse_formula(text)
    p = alternating_polynomial(expr)
    if p is not None:
        return AlternatingPolynomial(p)
    term = compile_term(expr)
    exact = not expr.has(sp.pi, sp.E, *_FLOAT_FUNCS)
    return Explicit(term, description=str(expr), is_exact=exact)


def parse_pi_multiple(text: str) -> tuple[float, Fraction | None]:
    """An angle such as ``pi/2``, ``-3pi/4`` or ``1``: (radians, multiple of pi or None)."""
    expr = parse_formula(text, variables=())
    ratio = sp.nsimplify(expr / sp.pi) if expr.has(sp.pi) else None
    if ratio is not None:
        if not ratio.is_Rational:
            raise ExpressionError(f"angle {text!r} is not a rational multiple of pi")
        frac = Fraction(int(ratio.p), int(ratio.q))
        return float(frac) * math.pi, frac
    if not expr.is_Rational:
        raise ExpressionError(f"angle {text!r} must be rational or a rational multiple of pi")
    return float(Fraction(int(expr.p), int(expr.q))), None
