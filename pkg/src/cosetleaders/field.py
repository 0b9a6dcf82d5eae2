"""Arithmetic in GF(p^m) and the word-level maps between F_q^n and N^{nm}.

Field elements are packed integers ``a1 + a2*p + ... + am*p^(m-1)`` in
``[0, q-1]``; the coefficient list ``[a1, ..., am]`` (the element
``a1 + a2*beta + ... + am*beta^(m-1)``) is the external view.  Words are plain
tuples of packed elements, so they hash cheaply and can live in sets.
"""
from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .exceptions import DegreeMismatch, LengthMismatch, NotIrreducible, NotPrime, SpecMismatch

Word = tuple[int, ...]

# Lexicographically first monic irreducible with nonzero constant term,
# coefficients ascending.  Degree-1 fields default to X.
DEFAULT_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
}

MAX_ORDER = 2**16
_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    r = 2
    while r * r <= p:
        if p % r == 0:
            return False
        r += 1
    return True


def _poly_rem(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """Remainder of f modulo the monic polynomial g over Z_p."""
    r = [c % p for c in f]
    dg = len(g) - 1
    for s in range(len(r) - 1 - dg, -1, -1):
        c = r[s + dg]
        if c:
            for t in range(dg + 1):
                r[s + t] = (r[s + t] - c * g[t]) % p
    return r[:dg]


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg(f)//2."""
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not any(_poly_rem(f, (*low, 1), p)):
                return False
    return True


def psi(k: int, p: int) -> int:
    """Canonical natural representative of the prime-field element k."""
    return k % p


class FieldSpec:
    """GF(p^m) built from an explicit monic irreducible polynomial f.

    >>> F = FieldSpec(2, 2)
    >>> F.mul(F.element([0, 1]), F.element([0, 1])) == F.element([1, 1])
    True
    """

    def __init__(self, p: int, m: int = 1, f: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_ORDER:
            raise DegreeMismatch(f"fields larger than {MAX_ORDER} elements are not supported")
        if f is None:
            f = DEFAULT_POLYNOMIALS.get((p, m))
            if f is None:
                if m != 1:
                    raise DegreeMismatch(f"no default polynomial for GF({p}^{m}); pass f explicitly")
                f = (0, 1)
        f = tuple(int(c) for c in f)
        if len(f) != m + 1:
            raise DegreeMismatch(f"f must have {m + 1} coefficients, got {len(f)}")
        if any(c < 0 or c >= p for c in f):
            raise DegreeMismatch(f"coefficients of f must lie in [0, {p - 1}]")
        if f[-1] != 1:
            raise DegreeMismatch("f must be monic")
        if not is_irreducible(f, p):
            raise NotIrreducible(f"{list(f)} is reducible over Z_{p}")
        self.p = p
        self.m = m
        self.f = f
        self.q = p**m
        self._exp, self._log = self._build_log_tables()
        if self.q <= _TABLE_LIMIT:
            self._add_table = [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]
        else:
            self._add_table = None
        self._neg = [self._neg_digits(a) for a in range(self.q)]

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, f={list(self.f)})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.f) == (other.p, other.m, other.f)

    def __hash__(self):
        return hash((self.p, self.m, self.f))

    # element encoding

    def coeffs(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**j) % p for j in range(self.m)]

    def element(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise LengthMismatch(f"expected {self.m} coefficients, got {len(coeffs)}")
        p = self.p
        return sum((c % p) * p**j for j, c in enumerate(coeffs))

    def format_element(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        terms = []
        for j, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            mono = "" if j == 0 else ("b" if j == 1 else f"b^{j}")
            coef = str(c) if (c != 1 or j == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) or "0"

    # arithmetic

    def _add_digits(self, a, b):
        p, out, scale = self.p, 0, 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _neg_digits(self, a):
        p, out, scale = self.p, 0, 1
        for _ in range(self.m):
            out += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def _poly_mul(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.element(_poly_rem(prod, self.f, self.p) if len(prod) > self.m else prod)

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            return [1], {1: 0}
        order = q - 1
        factors = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        for g in range(2, q):
            x, exp = 1, []
            for _ in range(order):
                exp.append(x)
                x = self._poly_mul(x, g)
            if x != 1 or len(set(exp)) != order:
                continue
            if all(exp[order // r] != 1 for r in factors):
                return exp, {v: i for i, v in enumerate(exp)}
        raise NotIrreducible(f"{list(self.f)} does not define a field")  # pragma: no cover

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    @cached_property
    def elements(self) -> range:
        return range(self.q)

    @cached_property
    def nonzero(self) -> range:
        return range(1, self.q)

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """Packed values of beta^0, ..., beta^(m-1)."""
        return tuple(self.p**j for j in range(self.m))


def make_field(p: int, m: int = 1, f: Sequence[int] | None = None) -> FieldSpec:
    return FieldSpec(p, m, f)


# word-level maps


def check_word(field: FieldSpec, v: Sequence[int], n: int | None = None) -> None:
    if n is not None and len(v) != n:
        raise SpecMismatch(f"word length {len(v)} != {n}")
    for a in v:
        if not 0 <= a < field.q:
            raise SpecMismatch(f"entry {a} is not an element of GF({field.q})")


def zero(n: int) -> Word:
    return (0,) * n


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def support(v: Sequence[int]) -> frozenset[int]:
    """1-based positions of the nonzero entries."""
    return frozenset(i + 1 for i, a in enumerate(v) if a)


def delta(field: FieldSpec, v: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in v:
        out.extend(field.coeffs(a))
    return tuple(out)


def nabla(field: FieldSpec, a: Sequence[int], n: int | None = None) -> Word:
    m = field.m
    if n is None:
        if len(a) % m:
            raise LengthMismatch(f"tuple length {len(a)} is not a multiple of m={m}")
        n = len(a) // m
    if len(a) != n * m:
        raise LengthMismatch(f"tuple length {len(a)} != n*m = {n * m}")
    return tuple(field.element(a[i * m:(i + 1) * m]) for i in range(n))


def is_standard_form(field: FieldSpec, a: Sequence[int]) -> bool:
    return all(0 <= x < field.p for x in a)


def gen_support(field: FieldSpec, v: Sequence[int]) -> frozenset[tuple[int, int]]:
    return frozenset(
        (i + 1, j + 1)
        for i, a in enumerate(v)
        if a
        for j, c in enumerate(field.coeffs(a))
        if c
    )


def unit(field: FieldSpec, n: int, i: int, j: int) -> Word:
    """The canonical generator e_ij = beta^(j-1) e_i (1-based i, j)."""
    if not (1 <= i <= n and 1 <= j <= field.m):
        raise LengthMismatch(f"generator index ({i}, {j}) out of range")
    v = [0] * n
    v[i - 1] = field.p ** (j - 1)
    return tuple(v)


def canonical_generators(field: FieldSpec, n: int) -> list[Word]:
    return [unit(field, n, i, j) for i in range(1, n + 1) for j in range(1, field.m + 1)]


def add(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Word:
    if len(u) != len(v):
        raise SpecMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    return tuple(field.add(a, b) for a, b in zip(u, v))


def sub(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Word:
    if len(u) != len(v):
        raise SpecMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def neg(field: FieldSpec, v: Sequence[int]) -> Word:
    return tuple(field.neg(a) for a in v)


def scale(field: FieldSpec, c: int, v: Sequence[int]) -> Word:
    return tuple(field.mul(c, a) for a in v)


def drop_coordinate(v: Sequence[int], i: int) -> Word:
    """v with coordinate i (1-based) set to zero."""
    if not 1 <= i <= len(v):
        raise LengthMismatch(f"coordinate {i} out of range for length {len(v)}")
    w = list(v)
    w[i - 1] = 0
    return tuple(w)


def wrap_free_steps(field: FieldSpec, v: Sequence[int], positions: Iterable[int] | None = None
                    ) -> Iterator[tuple[int, int, Word]]:
    """Yield (i, j, v + e_ij) for every generator whose addition needs no carry.

    ``positions`` restricts i (1-based); default is every coordinate.
    """
    p, m = field.p, field.m
    idx = range(1, len(v) + 1) if positions is None else positions
    for i in idx:
        a = v[i - 1]
        for j in range(m):
            scale_ = p**j
            if (a // scale_) % p + 1 < p:
                w = list(v)
                w[i - 1] = a + scale_
                yield i, j + 1, tuple(w)


def neighbours(field: FieldSpec, v: Sequence[int]) -> Iterator[Word]:
    """All words at Hamming distance exactly 1 from v."""
    for i, a in enumerate(v):
        for b in field.elements:
            if b != a:
                w = list(v)
                w[i] = b
                yield tuple(w)


def all_words(field: FieldSpec, n: int) -> Iterator[Word]:
    return product(range(field.q), repeat=n)


def pack_word(field: FieldSpec, v: Sequence[int]) -> int:
    key = 0
    for a in reversed(v):
        key = key * field.q + a
    return key


def unpack_word(field: FieldSpec, key: int, n: int) -> Word:
    out = []
    for _ in range(n):
        key, a = divmod(key, field.q)
        out.append(a)
    return tuple(out)
