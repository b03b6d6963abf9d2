"""Brute-force reference closure.

Applies the reduction rule to every (non-unit, unit) pair of the item pool
until nothing new appears.  There is no agenda, no priority and no
predicate bucketing, so agreement with the engine checks the engine's
scheduling and bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import indexing
from .engine import try_reduce
from .items import Item
from .solver import Solver
from .terms import Term, variant_key


@dataclass
class Closure:
    heads: list = field(default_factory=list)  # unit heads, one per variant class
    items: list = field(default_factory=list)
    overflow: bool = False

    def head_keys(self) -> set:
        return {variant_key(h) for h in self.heads}


def naive_closure(items, max_items: int = 2000, solver: Solver | None = None,
                  combine=indexing.combine) -> Closure:
    solver = solver or Solver()
    pool: list[Item] = []
    seen: set = set()

    def add(it: Item) -> bool:
        sig = it.signature()
        if sig in seen:
            return False
        seen.add(sig)
        pool.append(it)
        return True

    for it in items:
        add(it)
    tried: set = set()
    changed = True
    while changed:
        changed = False
        snapshot = list(enumerate(pool))
        for i, n in snapshot:
            if n.is_unit:
                continue
            for j, u in snapshot:
                if not u.is_unit or (i, j) in tried:
                    continue
                tried.add((i, j))
                if n.clause.selected is None:
                    continue
                new = try_reduce(n, u, solver, combine)[1]
                if new is not None and add(new):
                    changed = True
                    if len(pool) > max_items:
                        return _result(pool, overflow=True)
    return _result(pool, overflow=False)


def _result(pool, overflow) -> Closure:
    heads, keys = [], set()
    for it in pool:
        if it.is_unit:
            k = variant_key(it.clause.head)
            if k not in keys:
                keys.add(k)
                heads.append(it.clause.head)
    return Closure(heads, pool, overflow)


@lru_cache(maxsize=None)
def enumerate_bracketings(n: int) -> int:
    """Number of binary bracketings of ``n`` leaves, by splitting at every
    possible top-level position."""
    if n < 1:
        raise ValueError("need at least one leaf")
    if n == 1:
        return 1
    return sum(enumerate_bracketings(k) * enumerate_bracketings(n - k) for k in range(1, n))


def closure_for(goal: Term, program, scheme=None, max_items: int = 2000) -> Closure:
    """Scan ``goal`` like the engine does, then close naively."""
    from .lookup import scan, scan_nonunits

    solver = Solver(program)
    items = scan(goal, program, scheme, solver) + scan_nonunits(program)
    return naive_closure(items, max_items, solver)
