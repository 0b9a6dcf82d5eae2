"""Incremental construction of the weak order ideal of the coset leaders.

Words are expanded best-first in the weight compatible order starting from 0.
A popped word that is a coset leader spawns every carry-free ``v + e_ij``;
a word exactly one heavier than its coset spawns ``v + e_ij`` only on
coordinates i in its support whose removal leaves a coset leader.  Heavier
words are kept as members but never expanded.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .code import CosetTable, LinearCode
from .exceptions import InternalInconsistency
from .field import Word, drop_coordinate, wrap_free_steps, weight, zero
from .order import LEX, OrderSpec

LEADER, ONE_ABOVE, INERT = "leader", "one-above", "inert"


@dataclass
class IdealStats:
    words_processed: int = 0
    queue_peak: int = 0
    expanded_leaders: int = 0
    expanded_one_above: int = 0
    inert: int = 0


@dataclass
class IdealRegistry:
    code: LinearCode
    order: OrderSpec
    table: CosetTable
    members: set[Word]
    stats: IdealStats
    # child -> (parent, (i, j), criterion) for the first insertion; audit mode only
    provenance: dict[Word, tuple[Word, tuple[int, int], int]] | None = dc_field(default=None)

    def is_coset_leader(self, y: Sequence[int]) -> bool:
        return is_coset_leader(self, y)

    def coset_leaders_of(self, y: Sequence[int]) -> list[Word]:
        return coset_leaders_of(self, y)

    @property
    def leaders(self) -> frozenset[Word]:
        return self.table.leaders


def build_ideal(code: LinearCode, order: OrderSpec = LEX, *, audit: bool = False) -> IdealRegistry:
    code.check_table_size()
    F = code.field
    key = order.word_key(F)
    table = CosetTable(code, order)
    stats = IdealStats()
    provenance = {} if audit else None

    origin = zero(code.n)
    members = {origin}
    heap = [(key(origin), origin)]
    last_key = None
    current_weight = 0

    while heap:
        stats.queue_peak = max(stats.queue_peak, len(heap))
        k, v = heapq.heappop(heap)
        if last_key is not None and k <= last_key:
            raise InternalInconsistency(f"queue order violated at {v}")
        last_key = k
        w = k[0]
        current_weight = w
        stats.words_processed += 1

        skey = code.syndrome_key(v)
        rec = table.records.get(skey)
        if rec is not None and w < rec.weight:
            raise InternalInconsistency(f"{v} has weight {w} below its coset weight {rec.weight}")
        rec = table._insert(skey, v, w)

        excess = w - rec.weight
        if excess == 0:
            stats.expanded_leaders += 1
            children = ((i, j, u, 1) for i, j, u in wrap_free_steps(F, v))
        elif excess == 1:
            stats.expanded_one_above += 1
            allowed = []
            for i, a in enumerate(v, start=1):
                if not a:
                    continue
                base = drop_coordinate(v, i)
                # the barrier: base is strictly lighter, so its coset is final
                if weight(base) >= current_weight:
                    raise InternalInconsistency("leader lookup before its weight level closed")
                if table.is_leader(base):
                    allowed.append(i)
            children = ((i, j, u, 2) for i, j, u in wrap_free_steps(F, v, allowed))
        else:
            stats.inert += 1
            continue

        for i, j, u, criterion in children:
            if u in members:
                continue
            members.add(u)
            if provenance is not None:
                provenance[u] = (v, (i, j), criterion)
            heapq.heappush(heap, (key(u), u))

    if not table.complete:
        raise InternalInconsistency(
            f"only {len(table)} of {code.q ** (code.n - code.k)} cosets reached"
        )
    return IdealRegistry(code, order, table, members, stats, provenance)


def is_coset_leader(reg: IdealRegistry, y: Sequence[int]) -> bool:
    y = tuple(y)
    return weight(y) == reg.table.coset_weight(y) and reg.table.is_leader(y)


def coset_leaders_of(reg: IdealRegistry, y: Sequence[int]) -> list[Word]:
    return list(reg.table.leaders_of(y))


def classify_member(reg: IdealRegistry, v: Sequence[int]) -> str:
    excess = weight(v) - reg.table.coset_weight(v)
    return LEADER if excess == 0 else ONE_ABOVE if excess == 1 else INERT
