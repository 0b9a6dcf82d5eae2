"""Admissible orders on N^{nm} and the weight compatible order they induce on F_q^n."""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .exceptions import LengthMismatch, SpecMismatch
from .field import FieldSpec, Word, delta, sub, weight

TIE_BREAKS = ("lex", "deglex", "degrevlex")


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _sign(x, y) -> Cmp:
    return Cmp.LT if x < y else Cmp.GT if x > y else Cmp.EQ


@dataclass(frozen=True)
class OrderSpec:
    """Tie-break order on Delta-images; coordinate (1,1) is the most significant."""

    tie_break: str = "lex"

    def __post_init__(self):
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"unknown order {self.tie_break!r}; choose from {TIE_BREAKS}")

    def admissible_key(self, a: Sequence[int]) -> tuple:
        if self.tie_break == "lex":
            return tuple(a)
        if self.tie_break == "deglex":
            return (sum(a), *a)
        # degrevlex: among equal degree, the smaller tuple has the larger last differing entry
        return (sum(a), *(-x for x in reversed(a)))

    def word_key(self, field: FieldSpec) -> Callable[[Sequence[int]], tuple]:
        """Sort key realising the weight compatible order on words over ``field``."""
        coeffs = [tuple(field.coeffs(a)) for a in range(field.q)]
        tie = self.admissible_key

        def key(v):
            return (weight(v), tie([c for a in v for c in coeffs[a]]))

        return key


LEX = OrderSpec("lex")
DEGLEX = OrderSpec("deglex")
DEGREVLEX = OrderSpec("degrevlex")


def cmp_admissible(a: Sequence[int], b: Sequence[int], spec: OrderSpec = LEX) -> Cmp:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    return _sign(spec.admissible_key(a), spec.admissible_key(b))


def cmp_weight_compatible(field: FieldSpec, x: Sequence[int], y: Sequence[int],
                          spec: OrderSpec = LEX) -> Cmp:
    if len(x) != len(y):
        raise SpecMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    wx, wy = weight(x), weight(y)
    if wx != wy:
        return _sign(wx, wy)
    return cmp_admissible(delta(field, x), delta(field, y), spec)


def precedes(field: FieldSpec, x: Sequence[int], y: Sequence[int], spec: OrderSpec = LEX) -> bool:
    """x strictly before y in the weight compatible order."""
    return cmp_weight_compatible(field, x, y, spec) is Cmp.LT


def subset(field: FieldSpec, x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise comparison of Delta-images."""
    if len(x) != len(y):
        raise SpecMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    return all(a <= b for a, b in zip(delta(field, x), delta(field, y)))


def subset1(field: FieldSpec, x: Sequence[int], y: Sequence[int]) -> bool:
    """x is below y and the supports of x and y - x are disjoint."""
    if not subset(field, x, y):
        return False
    rest = sub(field, y, x)
    return not any(a and b for a, b in zip(x, rest))


def subwords1(y: Sequence[int]) -> Iterator[Word]:
    """Every x with x below y under subset1: restrictions of y to a subset of its support."""
    supp = [i for i, a in enumerate(y) if a]
    for r in range(len(supp) + 1):
        for keep in combinations(supp, r):
            x = [0] * len(y)
            for i in keep:
                x[i] = y[i]
            yield tuple(x)


def superwords1(field: FieldSpec, x: Sequence[int]) -> Iterator[Word]:
    """Every y with x below y under subset1: x extended arbitrarily off its support."""
    free = [i for i, a in enumerate(x) if a == 0]
    for values in product(range(field.q), repeat=len(free)):
        y = list(x)
        for i, a in zip(free, values):
            y[i] = a
        yield tuple(y)
