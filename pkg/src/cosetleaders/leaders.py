"""Leader codewords, test sets, gradient-like decoding and Voronoi geometry.

The geometry helpers enumerate the whole word space; they exist to check
properties on small codes and share the code's enumeration cap.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .code import CosetTable, LinearCode
from .exceptions import NotReducible
from .field import Word, drop_coordinate, neighbours, sub, weight, wrap_free_steps, zero
from .ideal import IdealRegistry
from .order import LEX, OrderSpec


@dataclass
class LeaderSet:
    words: frozenset[Word]
    # codeword -> (v1, (i, j), v2) with codeword = v1 + e_ij - v2; audit mode only
    provenance: dict[Word, list[tuple[Word, tuple[int, int], Word]]] | None = dc_field(default=None)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    def __contains__(self, w):
        return tuple(w) in self.words

    def sorted(self, field, order: OrderSpec = LEX) -> list[Word]:
        return sorted(self.words, key=order.word_key(field))

    @property
    def max_weight(self) -> int:
        return max((weight(w) for w in self.words), default=0)


def _has_leader_drop(table: CosetTable, w: Sequence[int]) -> list[int]:
    """Coordinates i (1-based, in supp(w)) whose removal leaves a coset leader."""
    return [i for i, a in enumerate(w, start=1) if a and table.is_leader(drop_coordinate(w, i))]


def leader_codewords(reg: IdealRegistry, *, audit: bool = False) -> LeaderSet:
    """Collect w - v over members w with a leader drop and leaders v != w of w's coset."""
    F = reg.code.field
    table = reg.table
    found: set[Word] = set()
    provenance: dict[Word, list] | None = {} if audit else None
    for w in reg.members:
        if not any(w):
            continue
        drops = _has_leader_drop(table, w)
        if not drops:
            continue
        for v in table.leaders_of(w):
            if v == w:
                continue
            c = sub(F, w, v)
            found.add(c)
            if provenance is not None:
                i = drops[0]
                j = next(j for j, coef in enumerate(F.coeffs(w[i - 1]), start=1) if coef)
                v1 = list(w)
                v1[i - 1] = F.sub(w[i - 1], F.p ** (j - 1))
                provenance.setdefault(c, []).append((tuple(v1), (i, j), v))
    if provenance is not None:
        for triples in provenance.values():
            triples.sort()
    return LeaderSet(frozenset(found), provenance)


def leader_codewords_by_definition(code: LinearCode, table: CosetTable) -> frozenset[Word]:
    """Independent route: scan every (v1, e_ij, v2) triple over the whole word space."""
    F = code.field
    out: set[Word] = set()
    for v1 in code.words():
        for i, j, u in wrap_free_steps(F, v1):
            if not table.is_leader(drop_coordinate(v1, i)):
                continue
            # u - v2 is a codeword exactly when v2 shares u's syndrome
            for v2 in table.leaders_of(u):
                c = sub(F, u, v2)
                if any(c):
                    out.add(c)
    return frozenset(out)


def is_test_set(code: LinearCode, T: Iterable[Sequence[int]], table: CosetTable | None = None):
    """True, or the first word (product order) that is neither a leader nor reducible by T."""
    T = [tuple(c) for c in T]
    F = code.field
    for y in code.words():
        wy = weight(y)
        if in_voronoi_zero(code, y, table):
            continue
        if not any(weight(sub(F, y, v)) < wy for v in T):
            return y
    return True


def in_voronoi_zero(code: LinearCode, y: Sequence[int], table: CosetTable | None = None) -> bool:
    if table is not None:
        return weight(y) == table.coset_weight(y)
    return voronoi_contains(code, zero(code.n), y)


def descent_step(field, y: Sequence[int], T: Iterable[Sequence[int]], order: OrderSpec = LEX) -> Word | None:
    """The least element of T (weight compatible order) that strictly lowers the weight of y."""
    wy = weight(y)
    best = None
    key = order.word_key(field)
    for v in T:
        if weight(sub(field, y, v)) < wy:
            if best is None or key(v) < key(best):
                best = tuple(v)
    return best


@dataclass
class DecodeResult:
    error: Word
    codeword: Word
    steps: int


def decode_gradient(field, y: Sequence[int], T: Iterable[Sequence[int]], order: OrderSpec = LEX,
                    table: CosetTable | None = None) -> DecodeResult:
    """Subtract test-set codewords while the weight drops.

    With a ``table`` the final word is checked to be a coset leader and
    NotReducible is raised otherwise.
    """
    key = order.word_key(field)
    ordered = sorted({tuple(c) for c in T}, key=key)
    y = tuple(y)
    e = y
    steps = 0
    while True:
        we = weight(e)
        v = next((c for c in ordered if weight(sub(field, e, c)) < we), None)
        if v is None:
            break
        e = sub(field, e, v)
        steps += 1
    if table is not None and weight(e) != table.coset_weight(e):
        raise NotReducible(e)
    return DecodeResult(e, sub(field, y, e), steps)


# geometry


def distance(field, x: Sequence[int], y: Sequence[int]) -> int:
    return sum(1 for a, b in zip(x, y) if a != b)


def voronoi_contains(code: LinearCode, c: Sequence[int], y: Sequence[int]) -> bool:
    d = distance(code.field, y, c)
    return all(d <= distance(code.field, y, other) for other in code.codewords)


def voronoi_region(code: LinearCode, c: Sequence[int]) -> frozenset[Word]:
    return frozenset(y for y in code.words() if voronoi_contains(code, c, y))


def boundary_x(code: LinearCode, A: Iterable[Sequence[int]]) -> frozenset[Word]:
    """Words whose minimum distance to A is exactly 1."""
    A = {tuple(a) for a in A}
    if not A:
        return frozenset()
    F = code.field
    return frozenset(
        y for y in code.words() if y not in A and any(u in A for u in neighbours(F, y))
    )


def boundary(code: LinearCode, A: Iterable[Sequence[int]]) -> frozenset[Word]:
    A = {tuple(a) for a in A}
    rest = [y for y in code.words() if y not in A]
    return boundary_x(code, A) | boundary_x(code, rest)


class Geometry:
    """Voronoi regions and their boundaries for one code, computed once and cached."""

    def __init__(self, code: LinearCode):
        self.code = code
        self._regions: dict[Word, frozenset[Word]] = {}
        self._x: dict[Word, frozenset[Word]] = {}
        self._delta: dict[Word, frozenset[Word]] = {}

    def region(self, c: Sequence[int]) -> frozenset[Word]:
        c = tuple(c)
        if c not in self._regions:
            self._regions[c] = voronoi_region(self.code, c)
        return self._regions[c]

    def x(self, c: Sequence[int]) -> frozenset[Word]:
        c = tuple(c)
        if c not in self._x:
            self._x[c] = boundary_x(self.code, self.region(c))
        return self._x[c]

    def delta(self, c: Sequence[int]) -> frozenset[Word]:
        c = tuple(c)
        if c not in self._delta:
            self._delta[c] = boundary(self.code, self.region(c))
        return self._delta[c]

    def zero_neighbours(self) -> frozenset[Word]:
        origin = zero(self.code.n)
        d0 = self.delta(origin)
        return frozenset(z for z in self.code.nonzero_codewords if self.delta(z) & d0)

    def touches_weakly(self, w: Sequence[int]) -> bool:
        """X(D(0)) meets D(w) or X(D(w))."""
        x0 = self.x(zero(self.code.n))
        return bool(x0 & (self.region(w) | self.x(w)))

    def touches_strongly(self, w: Sequence[int]) -> bool:
        """X(D(0)) meets D(w)."""
        return bool(self.x(zero(self.code.n)) & self.region(w))


def zero_neighbours(code: LinearCode) -> frozenset[Word]:
    return Geometry(code).zero_neighbours()
