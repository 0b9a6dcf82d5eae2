"""Linear codes over GF(p^m), syndromes, and exhaustive small-instance oracles."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

from .exceptions import CosetLeadersError, ParseError, RankDeficient, SpecMismatch, TooLarge
from .field import FieldSpec, Word, all_words, check_word, pack_word, weight
from .order import LEX, OrderSpec

ORACLE_CAP = 2**24
TABLE_CAP = 2**22


def _reduce(field: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


class LinearCode:
    """A k-dimensional subspace of F_q^n given by a generator matrix.

    ``cap`` bounds exhaustive enumerations of F_q^n and of the codewords;
    ``table_cap`` bounds the number of cosets q^(n-k).
    """

    def __init__(self, field: FieldSpec, G: Sequence[Sequence[int]], *, name: str | None = None,
                 cap: int = ORACLE_CAP, table_cap: int = TABLE_CAP):
        if not G or not G[0]:
            raise SpecMismatch("generator matrix must have at least one row and column")
        n = len(G[0])
        for row in G:
            check_word(field, row, n)
        k = len(G)
        if k > n:
            raise RankDeficient(f"k={k} exceeds n={n}")
        rows, pivots = _reduce(field, [list(r) for r in G])
        if len(rows) < k:
            raise RankDeficient(f"generator matrix has rank {len(rows)} < {k}")
        self.field = field
        self.n = n
        self.k = k
        self.name = name
        self.cap = cap
        self.table_cap = table_cap
        self.G = tuple(tuple(r) for r in G)
        self.G_reduced = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self.H = self._parity_check()
        # per coordinate, per element: contribution of y_j to the syndrome
        self._synd_cols = [
            [tuple(field.mul(a, h[j]) for h in self.H) for a in range(field.q)] for j in range(n)
        ]

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}] over GF({self.field.q})>"

    @property
    def q(self) -> int:
        return self.field.q

    def _parity_check(self) -> tuple[Word, ...]:
        F = self.field
        free = [c for c in range(self.n) if c not in self.pivots]
        H = []
        for c in free:
            row = [0] * self.n
            row[c] = 1
            for r, pc in enumerate(self.pivots):
                row[pc] = F.neg(self.G_reduced[r][c])
            H.append(tuple(row))
        return tuple(H)

    def syndrome(self, y: Sequence[int]) -> Word:
        if len(y) != self.n:
            raise SpecMismatch(f"word length {len(y)} != n={self.n}")
        add = self.field.add
        s = [0] * (self.n - self.k)
        for j, a in enumerate(y):
            if a:
                for r, b in enumerate(self._synd_cols[j][a]):
                    s[r] = add(s[r], b)
        return tuple(s)

    def syndrome_key(self, y: Sequence[int]) -> int:
        return pack_word(self.field, self.syndrome(y))

    def is_codeword(self, y: Sequence[int]) -> bool:
        return not any(self.syndrome(y))

    def encode(self, message: Sequence[int]) -> Word:
        F = self.field
        out = [0] * self.n
        for a, row in zip(message, self.G):
            if a:
                out = [F.add(x, F.mul(a, b)) for x, b in zip(out, row)]
        return tuple(out)

    def _guard(self, what: str, size: int, cap: int) -> None:
        if size > cap:
            raise TooLarge(what, size, cap)

    @cached_property
    def codewords(self) -> tuple[Word, ...]:
        self._guard("codeword enumeration", self.q**self.k, self.cap)
        return tuple(self.encode(msg) for msg in all_words(self.field, self.k))

    @cached_property
    def nonzero_codewords(self) -> tuple[Word, ...]:
        return tuple(c for c in self.codewords if any(c))

    def words(self) -> Iterator[Word]:
        """Every word of F_q^n, in product order."""
        self._guard("word-space enumeration", self.q**self.n, self.cap)
        return all_words(self.field, self.n)

    def check_table_size(self) -> None:
        self._guard("coset table", self.q ** (self.n - self.k), self.table_cap)

    @cached_property
    def min_distance(self) -> int:
        """Exact d by codeword enumeration; n + 1 for the zero code."""
        return min((weight(c) for c in self.nonzero_codewords), default=self.n + 1)

    @property
    def t(self) -> int:
        return (self.min_distance - 1) // 2


def make_code(field: FieldSpec, G: Sequence[Sequence[int]], **kwargs) -> LinearCode:
    return LinearCode(field, G, **kwargs)


def syndrome(code: LinearCode, y: Sequence[int]) -> Word:
    return code.syndrome(y)


def min_distance(code: LinearCode) -> int:
    return code.min_distance


@dataclass
class CosetRecord:
    syndrome: Word
    weight: int
    leaders: list[Word] = dc_field(default_factory=list)

    @property
    def canonical(self) -> Word:
        """The least leader in the weight compatible order (leaders are kept sorted)."""
        return self.leaders[0]


class CosetTable:
    """Per-syndrome coset weight and complete leader list."""

    def __init__(self, code: LinearCode, order: OrderSpec = LEX):
        self.code = code
        self.order = order
        self.records: dict[int, CosetRecord] = {}
        self._leader_set: set[Word] = set()

    def __len__(self):
        return len(self.records)

    def __iter__(self) -> Iterator[CosetRecord]:
        return iter(self.records[k] for k in sorted(self.records))

    def get(self, y: Sequence[int]) -> CosetRecord | None:
        return self.records.get(self.code.syndrome_key(y))

    def _insert(self, key: int, y: Word, w: int) -> CosetRecord:
        rec = self.records.get(key)
        if rec is None:
            rec = self.records[key] = CosetRecord(self.code.syndrome(y), w, [y])
            self._leader_set.add(y)
        elif w == rec.weight:
            rec.leaders.append(y)
            self._leader_set.add(y)
        return rec

    def coset_weight(self, y: Sequence[int]) -> int:
        return self.records[self.code.syndrome_key(y)].weight

    def leaders_of(self, y: Sequence[int]) -> list[Word]:
        return self.records[self.code.syndrome_key(y)].leaders

    def canonical_of(self, y: Sequence[int]) -> Word:
        return self.records[self.code.syndrome_key(y)].canonical

    def is_leader(self, y: Sequence[int]) -> bool:
        return tuple(y) in self._leader_set

    @property
    def leaders(self) -> frozenset[Word]:
        return frozenset(self._leader_set)

    @property
    def complete(self) -> bool:
        return len(self.records) == self.code.q ** (self.code.n - self.code.k)

    @property
    def covering_radius(self) -> int:
        return max(rec.weight for rec in self.records.values())

    def as_dict(self) -> dict[Word, tuple[int, frozenset[Word]]]:
        """Syndrome -> (coset weight, leader set); convenient for equality checks."""
        return {rec.syndrome: (rec.weight, frozenset(rec.leaders)) for rec in self.records.values()}


def brute_force_coset_table(code: LinearCode, order: OrderSpec = LEX) -> CosetTable:
    """Oracle: enumerate all of F_q^n in the weight compatible order."""
    code.check_table_size()
    key = order.word_key(code.field)
    table = CosetTable(code, order)
    for y in sorted(code.words(), key=key):
        table._insert(code.syndrome_key(y), y, weight(y))
    return table


def covering_radius(code: LinearCode, table: CosetTable | None = None) -> int:
    if table is None:
        table = brute_force_coset_table(code)
    return table.covering_radius


# code files


def parse_code(text: str, name: str | None = None, **kwargs) -> LinearCode:
    """Parse the plain-text code format (``#`` starts a comment).

    Line 1 is ``p m n k``; when m > 1 the next line holds the m+1 coefficients
    of f; then k rows of n packed field elements.
    """
    lines: list[tuple[int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            tokens.append((col + 1, tok))
            col += len(tok)
        if tokens:
            lines.append((lineno, tokens))
    if not lines:
        raise ParseError("empty code file", 1)

    def ints(entry, expected, what):
        lineno, tokens = entry
        if len(tokens) != expected:
            col = tokens[min(len(tokens), expected) - 1][0] if tokens else 1
            raise ParseError(f"{what}: expected {expected} integers, got {len(tokens)}", lineno, col)
        out = []
        for col, tok in tokens:
            try:
                out.append(int(tok))
            except ValueError:
                raise ParseError(f"{what}: {tok!r} is not an integer", lineno, col) from None
        return out

    p, m, n, k = ints(lines[0], 4, "header")
    pos = 1
    f = None
    if m > 1:
        if len(lines) < 2:
            raise ParseError("missing polynomial line", lines[0][0] + 1)
        f = ints(lines[1], m + 1, "polynomial")
        pos = 2
    rows = lines[pos:]
    if len(rows) != k:
        where = rows[k][0] if len(rows) > k else lines[-1][0] + 1
        raise ParseError(f"expected {k} generator rows, got {len(rows)}", where)
    try:
        F = FieldSpec(p, m, f)
    except CosetLeadersError as exc:
        raise ParseError(str(exc), lines[1 if m > 1 else 0][0], 1) from exc
    G = []
    for entry in rows:
        row = ints(entry, n, "generator row")
        for (col, _), a in zip(entry[1], row):
            if not 0 <= a < F.q:
                raise ParseError(f"element {a} outside [0, {F.q - 1}]", entry[0], col)
        G.append(row)
    return LinearCode(F, G, name=name, **kwargs)


def format_code(code: LinearCode, comment: str | None = None) -> str:
    F = code.field
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{F.p} {F.m} {code.n} {code.k}")
    if F.m > 1:
        out.append(" ".join(map(str, F.f)))
    out.extend(" ".join(map(str, row)) for row in code.G)
    return "\n".join(out) + "\n"


DATA_DIR = Path(__file__).with_name("data")


def bundled_codes() -> list[str]:
    return sorted(p.stem for p in DATA_DIR.glob("*.code"))


def load_code(path_or_name: str | Path, **kwargs) -> LinearCode:
    """Load a code file; a bare name resolves to a bundled code."""
    path = Path(path_or_name)
    if not path.exists():
        bundled = DATA_DIR / f"{path_or_name}.code"
        if bundled.exists():
            path = bundled
        else:
            raise FileNotFoundError(f"no code file or bundled code named {str(path_or_name)!r}")
    return parse_code(path.read_text(), name=path.stem, **kwargs)


def random_code(field: FieldSpec, n: int, k: int, seed: int) -> LinearCode:
    """A random full-rank [n, k] code in systematic form, reproducible from ``seed``."""
    rng = random.Random(seed)
    while True:
        G = [[1 if c == r else 0 for c in range(k)] + [rng.randrange(field.q) for _ in range(n - k)]
             for r in range(k)]
        code = LinearCode(field, G)
        # skip codes with an identically-zero coordinate
        if all(any(row[c] for row in G) for c in range(n)):
            return code

