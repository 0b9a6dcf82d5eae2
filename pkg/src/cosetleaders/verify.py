"""Exhaustive property checks for one code, used by the ``verify`` command.

Every check compares the fast path against an independent brute-force
computation over the whole word space, so this only runs on small codes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from typing import Callable

from .code import LinearCode, brute_force_coset_table
from .errors import (
    classify_errors, is_trial_set, larger_halves, monotonicity_violations,
    plain_subset_counterexample, trial_set_from_leaders, witness, H_set,
)
from .field import FieldSpec, Word, drop_coordinate, gen_support, wrap_free_steps, weight, zero
from .ideal import build_ideal
from .leaders import Geometry, decode_gradient, is_test_set, leader_codewords, leader_codewords_by_definition
from .order import LEX, OrderSpec, subwords1

RANDOM_TRIALS = 100


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    code: LinearCode
    order: OrderSpec
    checks: list[CheckResult] = dc_field(default_factory=list)
    notes: list[tuple[str, str]] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "code": self.code.name,
            "order": self.order.tie_break,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "notes": [{"name": k, "value": v} for k, v in self.notes],
        }


class Context:
    """Lazily computed artefacts shared between checks."""

    def __init__(self, code: LinearCode, order: OrderSpec, seed: int):
        self.code = code
        self.order = order
        self.seed = seed
        self.F = code.field
        self.key = order.word_key(code.field)

    @cached_property
    def oracle(self):
        return brute_force_coset_table(self.code, self.order)

    @cached_property
    def registry(self):
        return build_ideal(self.code, self.order)

    @cached_property
    def leaders(self) -> frozenset[Word]:
        return leader_codewords(self.registry).words

    @cached_property
    def classification(self):
        return classify_errors(self.code, self.order, self.oracle)

    @cached_property
    def geometry(self) -> Geometry:
        return Geometry(self.code)

    @cached_property
    def random_candidates(self) -> list[list[Word]]:
        rng = random.Random(self.seed)
        pool = list(self.code.nonzero_codewords)
        return [sorted(rng.sample(pool, rng.randint(0, len(pool)))) for _ in range(RANDOM_TRIALS)]


def _first(items, limit=3) -> str:
    items = list(items)
    shown = ", ".join(str(list(x)) if isinstance(x, tuple) else str(x) for x in items[:limit])
    more = f" (+{len(items) - limit} more)" if len(items) > limit else ""
    return shown + more


def _verdict(violations, ok_detail="") -> tuple[bool, str]:
    violations = list(violations)
    if violations:
        return False, f"{len(violations)} violation(s): {_first(violations)}"
    return True, ok_detail


# field and order


def check_field_axioms(ctx: Context, samples: int = 200):
    F: FieldSpec = ctx.F
    rng = random.Random(ctx.seed)
    bad = []
    for _ in range(samples):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        if F.add(F.add(a, b), c) != F.add(a, F.add(b, c)):
            bad.append(("add-assoc", a, b, c))
        if F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)):
            bad.append(("mul-assoc", a, b, c))
        if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
            bad.append(("distrib", a, b, c))
        if F.add(a, F.neg(a)) != 0 or (a and F.mul(a, F.inv(a)) != 1):
            bad.append(("inverse", a))
    return _verdict(bad, f"{samples} random triples")


def _coefficient_shrinks(F: FieldSpec, w: Word):
    per = [[F.element(cs) for cs in product(*(range(c + 1) for c in F.coeffs(a)))] for a in w]
    return product(*per)


def check_order_monotone(ctx: Context):
    bad = []
    count = 0
    for w in ctx.code.words():
        kw = ctx.key(w)
        for v in _coefficient_shrinks(ctx.F, w):
            if v != w:
                count += 1
                if not ctx.key(v) < kw:
                    bad.append((v, w))
    return _verdict(bad, f"{count} pairs")


# ideal


def ideal_by_fixpoint(code: LinearCode, table) -> set[Word]:
    """Least set closed under both criteria, using the oracle's leader data."""
    F = code.field
    members = {zero(code.n)}
    frontier = list(members)
    while frontier:
        nxt = []
        for v in frontier:
            excess = weight(v) - table.coset_weight(v)
            if excess == 0:
                kids = [u for _, _, u in wrap_free_steps(F, v)]
            elif excess == 1:
                pos = [i for i, a in enumerate(v, 1) if a and table.is_leader(drop_coordinate(v, i))]
                kids = [u for _, _, u in wrap_free_steps(F, v, pos)]
            else:
                kids = []
            for u in kids:
                if u not in members:
                    members.add(u)
                    nxt.append(u)
        frontier = nxt
    return members


def check_table_equality(ctx: Context):
    ours, theirs = ctx.registry.table.as_dict(), ctx.oracle.as_dict()
    diff = [s for s in set(ours) | set(theirs) if ours.get(s) != theirs.get(s)]
    return _verdict(sorted(diff), f"{len(theirs)} cosets")


def check_theorem4(ctx: Context):
    missing = sorted(ctx.oracle.leaders - ctx.registry.members)
    return _verdict(missing, f"{len(ctx.oracle.leaders)} leaders in {len(ctx.registry.members)} members")


def check_fixpoint(ctx: Context):
    expected = ideal_by_fixpoint(ctx.code, ctx.oracle)
    diff = sorted(expected ^ ctx.registry.members)
    return _verdict(diff, f"{len(expected)} members")


def check_weak_ideal(ctx: Context):
    F, members = ctx.F, ctx.registry.members
    p = F.p
    bad = []
    for w in sorted(members):
        if not any(w):
            continue
        ok = False
        for i, j in gen_support(F, w):
            v = list(w)
            v[i - 1] = F.sub(w[i - 1], p ** (j - 1))
            if tuple(v) in members:
                ok = True
                break
        if not ok:
            bad.append(w)
    return _verdict(bad)


def check_theorem_h(ctx: Context):
    leaders = ctx.oracle.leaders
    bad = [(x, s) for x in sorted(leaders) for s in subwords1(x) if s not in leaders]
    return _verdict(bad, f"{len(leaders)} leaders")


def check_theorem1(ctx: Context):
    table = ctx.oracle
    bad = []
    count = 0
    for x in sorted(table.leaders):
        for i, a in enumerate(x, 1):
            if not a:
                continue
            for s in subwords1(drop_coordinate(x, i)):
                for b in ctx.F.elements:
                    xp = list(s)
                    xp[i - 1] = b
                    xp = tuple(xp)
                    count += 1
                    if weight(xp) > table.coset_weight(xp) + 1:
                        bad.append((x, i, xp))
    return _verdict(bad, f"{count} (x, i, x') triples")


def check_theorem3(ctx: Context):
    members = ctx.registry.members
    bad = []
    for x in sorted(ctx.oracle.leaders):
        for i, a in enumerate(x):
            if a:
                continue
            for b in ctx.F.elements:
                w = list(x)
                w[i] = b
                if tuple(w) not in members:
                    bad.append(tuple(w))
    return _verdict(bad)


# leader codewords


def check_recipe(ctx: Context):
    brute = leader_codewords_by_definition(ctx.code, ctx.oracle)
    diff = sorted(brute ^ ctx.leaders)
    return _verdict(diff, f"|L(C)| = {len(brute)}")


def check_test_set(ctx: Context):
    res = is_test_set(ctx.code, ctx.leaders)
    if res is True:
        return True, ""
    return False, f"counterexample {list(res)}"


def check_weight_bound(ctx: Context):
    rho = ctx.oracle.covering_radius
    mx = max((weight(w) for w in ctx.leaders), default=0)
    return mx <= 2 * rho + 1, f"max weight {mx}, 2*rho+1 = {2 * rho + 1}"


def check_item3(ctx: Context):
    g = ctx.geometry
    bad = [w for w in sorted(ctx.leaders) if not g.touches_weakly(w)]
    return _verdict(bad)


def check_zero_neighbours(ctx: Context):
    z = ctx.geometry.zero_neighbours()
    return _verdict(sorted(ctx.leaders - z), f"|Z(C)| = {len(z)}")


def check_item4(ctx: Context):
    g = ctx.geometry
    bad = [w for w in ctx.code.codewords if g.touches_strongly(w) and w not in ctx.leaders]
    return _verdict(bad)


def check_voronoi_zero(ctx: Context):
    d0 = ctx.geometry.region(zero(ctx.code.n))
    return _verdict(sorted(d0 ^ ctx.oracle.leaders), f"|D(0)| = {len(d0)}")


def check_decoding(ctx: Context):
    bad = []
    for y in ctx.code.words():
        res = decode_gradient(ctx.F, y, ctx.leaders, ctx.order)
        if weight(res.error) != ctx.oracle.coset_weight(y) or not ctx.code.is_codeword(res.codeword):
            bad.append(y)
    return _verdict(bad, f"{ctx.code.q ** ctx.code.n} words")


# error taxonomy


def check_h_set(ctx: Context):
    E0 = ctx.classification.E0
    bad = [y for y in ctx.code.words() if (not H_set(ctx.code, y, ctx.order)) != (y in E0)]
    return _verdict(bad)


def check_monotone(ctx: Context):
    return _verdict(monotonicity_violations(ctx.code, ctx.classification))


def check_larger_halves(ctx: Context):
    bad = []
    E1 = ctx.classification.E1
    for c in ctx.code.nonzero_codewords:
        wc = weight(c)
        for u in larger_halves(ctx.code, c, ctx.order):
            if not (wc <= 2 * weight(u) <= wc + 2) or u not in E1:
                bad.append((c, u))
    return _verdict(bad)


def check_leaders_trial(ctx: Context):
    rep = is_trial_set(ctx.code, ctx.leaders, ctx.order, ctx.classification)
    return rep.definition, str(rep.as_dict())


def _prop_agreement(ctx: Context, field_name: str):
    cands = [sorted(ctx.leaders)] + ctx.random_candidates
    bad = []
    for idx, T in enumerate(cands):
        rep = is_trial_set(ctx.code, T, ctx.order, ctx.classification)
        if rep.definition != getattr(rep, field_name):
            bad.append(idx)
    return _verdict(bad, f"{len(cands)} candidate sets")


def check_prop2(ctx: Context):
    return _prop_agreement(ctx, "prop2")


def check_prop3(ctx: Context):
    return _prop_agreement(ctx, "prop3")


def check_filtered_trial(ctx: Context):
    T = trial_set_from_leaders(ctx.registry, ctx.classification, ctx.leaders)
    rep = is_trial_set(ctx.code, T, ctx.order, ctx.classification)
    no_witness = [c for c in sorted(T) if witness(ctx.code, c, ctx.classification, ctx.order) is None]
    ok = rep.definition and T <= ctx.leaders and not no_witness
    return ok, f"|T| = {len(T)} of {len(ctx.leaders)}"


CHECKS: list[tuple[str, Callable[[Context], tuple[bool, str]]]] = [
    ("field axioms", check_field_axioms),
    ("order: subset implies precedes", check_order_monotone),
    ("ideal: leader table equals oracle", check_table_equality),
    ("ideal: Theorem 4 (CL inside O(C))", check_theorem4),
    ("ideal: equals least fixpoint of the criteria", check_fixpoint),
    ("ideal: weak order ideal", check_weak_ideal),
    ("Theorem H", check_theorem_h),
    ("Theorem 1", check_theorem1),
    ("Theorem 3", check_theorem3),
    ("D(0) equals CL(C)", check_voronoi_zero),
    ("L(C): recipe equals definition", check_recipe),
    ("L(C) item 1: test set", check_test_set),
    ("L(C) item 2: weight <= 2 rho + 1", check_weight_bound),
    ("L(C) item 3: boundary condition", check_item3),
    ("L(C) inside Z(C)", check_zero_neighbours),
    ("L(C) item 4: converse", check_item4),
    ("decoding soundness", check_decoding),
    ("H(y) empty iff correctable", check_h_set),
    ("monotone structure under subset1", check_monotone),
    ("larger halves: weight sandwich, uncorrectable", check_larger_halves),
    ("final Theorem item 1: L(C) trial set", check_leaders_trial),
    ("Proposition: definition iff item 2", check_prop2),
    ("Proposition: definition iff item 3", check_prop3),
    ("final Theorem item 2: filtered trial set", check_filtered_trial),
]


def run_checks(code: LinearCode, order: OrderSpec = LEX, seed: int = 0) -> VerifyReport:
    ctx = Context(code, order, seed)
    report = VerifyReport(code, order)
    for name, fn in CHECKS:
        passed, detail = fn(ctx)
        report.checks.append(CheckResult(name, bool(passed), detail))

    g = ctx.geometry
    weak_only = [w for w in sorted(ctx.leaders) if not g.touches_strongly(w)]
    report.notes.append(("leader codewords missing X(D(0)) & D(w)", _first(weak_only) or "none"))
    pair = plain_subset_counterexample(code, ctx.classification)
    report.notes.append((
        "plain-subset monotonicity counterexample",
        f"{list(pair[0])} uncorrectable below correctable {list(pair[1])}" if pair else "none found",
    ))
    st = ctx.registry.stats
    report.notes.append(("O(C) size", f"{len(ctx.registry.members)} of {code.q ** code.n} words"))
    report.notes.append(("unexpanded members (excess >= 2)", str(st.inert)))
    return report
