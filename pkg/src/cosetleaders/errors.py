"""Correctable and uncorrectable errors, larger halves, and trial sets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .code import CosetTable, LinearCode, brute_force_coset_table
from .exceptions import NotTrialSet, ZeroCodeword
from .field import Word, add, sub
from .ideal import IdealRegistry
from .leaders import leader_codewords
from .order import LEX, OrderSpec, subwords1, superwords1


@dataclass
class ErrorClassification:
    E0: frozenset[Word]
    E1: frozenset[Word]
    M1: frozenset[Word]
    M0: frozenset[Word]
    table: CosetTable


def classify_errors(code: LinearCode, order: OrderSpec = LEX,
                    table: CosetTable | None = None) -> ErrorClassification:
    if table is None:
        table = brute_force_coset_table(code, order)
    E0 = frozenset(rec.canonical for rec in table)
    E1 = frozenset(y for y in code.words() if y not in E0)
    M1 = frozenset(
        y for y in E1 if not any(x != y and x in E1 for x in subwords1(y))
    )
    M0 = frozenset(
        x for x in E0 if not any(y != x and y in E0 for y in superwords1(code.field, x))
    )
    return ErrorClassification(E0, E1, M1, M0, table)


def H_set(code: LinearCode, y: Sequence[int], order: OrderSpec = LEX) -> frozenset[Word]:
    """Codewords c with y - c strictly before y."""
    key = order.word_key(code.field)
    ky = key(y)
    F = code.field
    return frozenset(c for c in code.codewords if key(sub(F, y, c)) < ky)


def larger_halves(code: LinearCode, c: Sequence[int], order: OrderSpec = LEX) -> frozenset[Word]:
    """Minimal (under subset1) words u below c with u - c strictly before u."""
    c = tuple(c)
    if not any(c):
        raise ZeroCodeword("larger halves are defined for nonzero codewords only")
    F = code.field
    key = order.word_key(F)
    cands = {u for u in subwords1(c) if key(sub(F, u, c)) < key(u)}
    return frozenset(u for u in cands if not any(x != u and x in cands for x in subwords1(u)))


def larger_halves_of(code: LinearCode, T: Iterable[Sequence[int]], order: OrderSpec = LEX
                     ) -> frozenset[Word]:
    out: set[Word] = set()
    for c in T:
        out |= larger_halves(code, c, order)
    return frozenset(out)


@dataclass
class TrialSetReport:
    """Outcome of the trial-set definition and of its two characterisations.

    ``definition`` tests ``y <= y - c``; ``definition_plus`` is the same test
    with ``y + c``.  They coincide in characteristic 2 and whenever T is
    closed under negation.
    """

    definition: bool
    prop2: bool
    prop3: bool
    definition_plus: bool

    @property
    def consistent(self) -> bool:
        return self.definition == self.prop2 == self.prop3

    def __bool__(self):
        return self.definition

    def as_dict(self) -> dict[str, bool]:
        return {"definition": self.definition, "prop2": self.prop2, "prop3": self.prop3}


def _definition_holds(code, T, key, E0, step) -> bool:
    for y in code.words():
        ky = key(y)
        if all(ky <= key(step(y, c)) for c in T) != (y in E0):
            return False
    return True


def is_trial_set(code: LinearCode, T: Iterable[Sequence[int]], order: OrderSpec = LEX,
                 classification: ErrorClassification | None = None) -> TrialSetReport:
    """Check the trial-set definition and both equivalent characterisations."""
    T = [tuple(c) for c in T]
    if classification is None:
        classification = classify_errors(code, order)
    F = code.field
    key = order.word_key(F)
    E0 = classification.E0

    definition = _definition_holds(code, T, key, E0, lambda y, c: sub(F, y, c))
    if F.p == 2:
        definition_plus = definition
    else:
        definition_plus = _definition_holds(code, T, key, E0, lambda y, c: add(F, y, c))

    def hits(y):
        ky = key(y)
        return any(key(sub(F, y, c)) < ky for c in T)

    prop2 = all(hits(y) for y in classification.M1)
    prop3 = classification.M1 <= larger_halves_of(code, T, order)
    return TrialSetReport(definition, prop2, prop3, definition_plus)


def witness(code: LinearCode, c: Sequence[int], classification: ErrorClassification,
            order: OrderSpec = LEX) -> Word | None:
    """Some y in M1 among the larger halves of c with y - c correctable, if any."""
    F = code.field
    for y in sorted(larger_halves(code, c, order) & classification.M1):
        if sub(F, y, c) in classification.E0:
            return y
    return None


def trial_set_from_leaders(reg: IdealRegistry, classification: ErrorClassification | None = None,
                           leaders: Iterable[Sequence[int]] | None = None) -> frozenset[Word]:
    """Keep the leader codewords that carry a minimal-uncorrectable witness."""
    code, order = reg.code, reg.order
    if classification is None:
        classification = classify_errors(code, order, reg.table)
    if leaders is None:
        leaders = leader_codewords(reg).words
    T = frozenset(tuple(c) for c in leaders
                  if witness(code, c, classification, order) is not None)
    report = is_trial_set(code, T, order, classification)
    if not report.definition:
        raise NotTrialSet(f"filtered set of {len(T)} codewords is not a trial set: {report}")
    return T


def monotonicity_violations(code: LinearCode, classification: ErrorClassification):
    """Pairs x below y (subset1) with x uncorrectable but y correctable."""
    E1 = classification.E1
    for y in sorted(classification.E0):
        for x in subwords1(y):
            if x in E1:
                yield x, y


def plain_subset_counterexample(code: LinearCode, classification: ErrorClassification):
    """A pair (x, y), x below y coefficientwise with the same generalised support,
    x uncorrectable and y correctable; None when the code has no such pair."""
    F = code.field
    E1 = classification.E1
    for y in sorted(classification.E0):
        digits = [F.coeffs(a) for a in y]
        # each nonzero coefficient may shrink to any value in [1, itself]
        choices = [[tuple(range(1, c + 1)) if c else (0,) for c in d] for d in digits]
        for x in _coefficient_products(F, choices):
            if x != y and x in E1:
                return x, y
    return None


def _coefficient_products(F, choices):
    per_coord = []
    for coord in choices:
        per_coord.append([F.element(cs) for cs in product(*coord)])
    for x in product(*per_coord):
        yield tuple(x)
