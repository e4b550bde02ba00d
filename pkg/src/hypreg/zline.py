"""The reordered integer line 0, 1, 2, ..., -2, -1 and range sums over it.

``a`` precedes ``b`` when -1/a < -1/b, with 0 sent to minus infinity so that
it comes first.  Nonnegative integers then run upwards, "pass through
infinity", and come back along the negatives from -inf up to -1.

A summation range Z_{a,b} is the order interval [a, b] when a precedes or
equals b and the wrapped set [a, -1] u [0, b] otherwise.  Sums over it are
assigned F(b + 1) - F(a) for a generating function F of the summand.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import GeneratingFunctionError, OverlappingIntervalsError
from .exactnum import as_rational

__all__ = [
    "GeneratingFunction",
    "ZRange",
    "builtin_family",
    "direct_sum",
    "precedes",
    "resolve_range",
    "split_sum",
    "sum_over_range",
    "zorder_key",
    "zsorted",
]


def zorder_key(a: int) -> tuple[int, Fraction]:
    """Sort key realising the order; (0, 0) stands in for the -inf of zero."""
    if a == 0:
        return (0, Fraction(0))
    return (1, Fraction(-1, a))


def precedes(a: int, b: int) -> bool:
    return zorder_key(a) < zorder_key(b)


def precedes_or_equal(a: int, b: int) -> bool:
    return a == b or precedes(a, b)


def zsorted(values: Iterable[int]) -> list[int]:
    return sorted(values, key=zorder_key)


@dataclass(frozen=True)
class ZRange:
    """Resolved Z_{a,b}.

    For a finite range ``members`` lists the integers in order.  Infinite
    ranges always have a finite complement, kept in ``excluded``.
    """

    a: int
    b: int
    finite: bool
    members: tuple[int, ...] | None = None
    excluded: tuple[int, ...] | None = None

    @property
    def wrapped(self) -> bool:
        return precedes(self.b, self.a)

    def __contains__(self, u: int) -> bool:
        if self.wrapped:
            return precedes_or_equal(self.a, u) or precedes_or_equal(u, self.b)
        return precedes_or_equal(self.a, u) and precedes_or_equal(u, self.b)

    def describe(self) -> str:
        if self.finite:
            return "{" + ", ".join(str(u) for u in self.members) + "}"
        if not self.excluded:
            return "all integers"
        if self.excluded == (0,):
            return "all nonzero integers"
        return "all integers except {" + ", ".join(str(u) for u in self.excluded) + "}"


def _span(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


def resolve_range(a: int, b: int) -> ZRange:
    if not precedes(b, a):
        # order interval [a, b]
        if (a >= 0) == (b >= 0):
            return ZRange(a, b, True, members=tuple(_span(a, b)))
        # a >= 0 > b: runs through infinity
        excluded = tuple(_span(0, a - 1)) + tuple(_span(b + 1, -1))
        return ZRange(a, b, False, excluded=excluded)
    # wrapped: [a, -1] u [0, b]
    if a < 0 <= b:
        return ZRange(a, b, True, members=tuple(zsorted(list(_span(a, -1)) + list(_span(0, b)))))
    return ZRange(a, b, False, excluded=tuple(zsorted(_span(b + 1, a - 1))))


@dataclass(frozen=True)
class GeneratingFunction:
    """A closed form F with forward difference f, F(z + 1) - F(z) = f(z).

    When ``f`` is omitted it is derived from ``F``.  When both are given the
    identity is probed at ``probes`` integers straddling zero.
    """

    F: Callable[[int], Fraction]
    f: Callable[[int], Fraction] | None = None
    probes: int = 32
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.f is None:
            F = self.F
            object.__setattr__(self, "f", lambda z: F(z + 1) - F(z))
            return
        half = self.probes // 2
        for z in range(-half, self.probes - half):
            lhs = as_rational(self.F(z + 1)) - as_rational(self.F(z))
            if lhs != as_rational(self.f(z)):
                raise GeneratingFunctionError(
                    f"F({z + 1}) - F({z}) = {lhs} but f({z}) = {self.f(z)}"
                )


def sum_over_range(g: GeneratingFunction, a: int, b: int) -> Fraction:
    """F(b + 1) - F(a): the value assigned to the sum of f over Z_{a,b}."""
    return as_rational(g.F(b + 1)) - as_rational(g.F(a))


def direct_sum(g: GeneratingFunction, rng: ZRange) -> Fraction:
    if not rng.finite:
        raise ValueError("direct summation needs a finite range")
    return sum((as_rational(g.f(u)) for u in rng.members), Fraction(0))


def split_sum(
    g: GeneratingFunction,
    parts: Sequence[tuple[int, int] | None],
) -> Fraction:
    """Sum over a disjoint union of classical intervals [a1, b1] u [a2, b2].

    ``None`` stands for an empty part.
    """
    live = [p for p in parts if p is not None]
    for lo, hi in live:
        if lo > hi:
            raise ValueError(f"interval [{lo}, {hi}] is not a classical interval")
    for i, (lo1, hi1) in enumerate(live):
        for lo2, hi2 in live[i + 1:]:
            if lo1 <= hi2 and lo2 <= hi1:
                raise OverlappingIntervalsError(f"[{lo1}, {hi1}] and [{lo2}, {hi2}] overlap")
    return sum((sum_over_range(g, lo, hi) for lo, hi in live), Fraction(0))


def _alt(u):
    return 1 if u % 2 == 0 else -1


def _identity_F(u):
    return Fraction(u * (u - 1), 2)


def _square_F(u):
    return Fraction((u - 1) * u * (2 * u - 1), 6)


def _cube_F(u):
    return Fraction(u * (u - 1), 2) ** 2


_FAMILIES = {
    "constant": (lambda u: Fraction(u), lambda u: Fraction(1)),
    "identity": (_identity_F, lambda u: Fraction(u)),
    "square": (_square_F, lambda u: Fraction(u * u)),
    "cube": (_cube_F, lambda u: Fraction(u ** 3)),
    "alternating": (lambda u: Fraction(-_alt(u), 2), lambda u: Fraction(_alt(u))),
}


@functools.lru_cache(maxsize=None)
def builtin_family(name: str) -> GeneratingFunction:
    """Registered summands with closed-form generating functions."""
    try:
        F, f = _FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(_FAMILIES)}") from None
    return GeneratingFunction(F, f, name=name)


def family_names() -> list[str]:
    return sorted(_FAMILIES)
