"""Bottom-up Earley deduction: chart, agenda and the indexed reduction rule.

The prove loop follows the agenda procedures: scan the goal and queue the
resulting unit items together with every non-unit program clause (indexed
``free``), then repeatedly move the best item from the agenda to the chart
and reduce it against every chart item of the opposite kind whose predicate
matches.  New items go back on the agenda, never straight into the chart.
"""
from __future__ import annotations

import heapq
import json
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from typing import IO, Iterator

from . import indexing
from .errors import BudgetExceeded, DepthExceeded
from .indexing import Free, coverage
from .items import Item
from .lookup import scan, scan_nonunits
from .preferences import priority_of, resolve_pref
from .program import Clause, Goal, Program
from .solver import DEFAULT_DEPTH, Solver
from .syntax import format_term, read_term
from .terms import Subst, Term, apply, rename_apart, subsumes, term_vars, unify_into, variant_key

log = logging.getLogger(__name__)

BEST_FIRST = "best-first"
EXHAUSTIVE = "exhaustive"


@dataclass
class Options:
    scheme: str | None = None  # None: the grammar's #scheme, else directional
    mode: str = BEST_FIRST
    max_solutions: int | None = None
    max_items: int = 100_000
    max_steps: int = 1_000_000
    depth_bound: int = DEFAULT_DEPTH
    subsume: bool = False
    full_span: bool = False
    trace: IO | None = None


@dataclass(frozen=True)
class Solution:
    bindings: dict
    preference: float
    root: int
    head: Term

    def __str__(self):
        if self.bindings:
            text = ", ".join(f"{k} = {format_term(v)}" for k, v in self.bindings.items())
        else:
            text = "true"
        return f"{text}  [pref={self.preference:.6g} root=#{self.root}]"


@dataclass(frozen=True)
class ProofNode:
    item_id: int
    source_id: str
    head: Term
    children: tuple = ()

    def leaves(self) -> list["ProofNode"]:
        if not self.children:
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    def shape(self):
        """Structure up to variable renaming, for comparing trees."""
        return (self.source_id, variant_key(self.head), tuple(c.shape() for c in self.children))

    def format(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{format_term(self.head)}  (#{self.item_id} {self.source_id})"]
        lines.extend(c.format(indent + 1) for c in self.children)
        return "\n".join(lines)


class Agenda:
    """Max-priority queue; FIFO among equal priorities.  With
    ``best_first=False`` it is a plain FIFO queue."""

    def __init__(self, best_first: bool = True):
        self.best_first = best_first
        self._heap: list = []

    def push(self, item: Item) -> None:
        key = priority_of(item).sort_key() if self.best_first else (0, item.id)
        heapq.heappush(self._heap, (key, item.id, item))

    def pop(self) -> Item:
        return heapq.heappop(self._heap)[2]

    def __len__(self):
        return len(self._heap)


class Chart:
    def __init__(self):
        self.items: dict[int, Item] = {}
        self.units = defaultdict(list)  # head key -> ids
        self.nonunits = defaultdict(list)  # selected-goal key -> ids
        self.signatures: set = set()

    def __len__(self):
        return len(self.items)

    def __contains__(self, item_id):
        return item_id in self.items

    def __getitem__(self, item_id) -> Item:
        return self.items[item_id]

    def __iter__(self):
        return iter(self.items.values())

    def add(self, item: Item, signature=None) -> None:
        self.items[item.id] = item
        self.signatures.add(signature if signature is not None else item.signature())
        if item.is_unit:
            self.units[item.head_key()].append(item.id)
        else:
            self.nonunits[item.selected_key()].append(item.id)


def try_reduce(nonunit: Item, unit: Item, solver: Solver, combine=indexing.combine):
    """One application of the reduction rule with inline goals.

    Returns ``(status, item, diagnostic)`` where status is one of ``ok``,
    ``index``, ``mgu`` or ``inline``."""
    index = combine(nonunit.index, unit.index)
    if index is None:
        return "index", None, None
    clause = nonunit.clause
    body = clause.body
    k = clause.selected
    b: dict = {}
    if not unify_into(body[k].literal, unit.clause.head, b):
        return "mgu", None, None
    j = k + 1
    while j < len(body) and body[j].inline:
        j += 1
    xi = [g.literal for g in body[:k]] + [g.literal for g in body[k + 1:j]]
    if xi:
        try:
            solved = solver.solve_first(xi, b)
        except DepthExceeded as e:
            return "inline", None, f"{clause.source_id}: {e}"
        if solved is None:
            return "inline", None, None
        b = solved[0]
    rest = tuple(Goal(apply(b, g.literal), g.mode) for g in body[j:])
    new = rename_apart(Clause(apply(b, clause.head), rest, clause.pref, clause.source_id))
    slots = nonunit.slots + (unit.preference,)
    pref = resolve_pref(clause.pref, slots) if not rest else 1.0
    return "ok", Item(new, index, slots, pref, parents=(nonunit.id, unit.id)), None


def reduce_mixed(nonunit: Item, unit: Item, solver: Solver,
                 combine=indexing.combine) -> Item | None:
    return try_reduce(nonunit, unit, solver, combine)[1]


def chart_bound(program: Program, n: int) -> int:
    """Item-count ceiling for position-indexed runs without tree-building:
    clauses * (max body length + 1) * number of spans."""
    clauses = program.all_clauses()
    b = max((len(c.body) for c in clauses), default=0)
    return len(clauses) * (b + 1) * n * (n + 1) // 2


class Engine:
    """State of one proof: chart, agenda, statistics and solutions."""

    combine = staticmethod(indexing.combine)

    def __init__(self, program: Program, options: Options | None = None, **overrides):
        self.program = program
        self.options = replace(options or Options(), **overrides)
        if self.options.mode not in (BEST_FIRST, EXHAUSTIVE):
            raise ValueError(f"unknown mode {self.options.mode!r}")
        self.scheme = self.options.scheme or program.scheme
        self.solver = Solver(program, self.options.depth_bound)
        self.chart = Chart()
        self.agenda = Agenda(self.options.mode == BEST_FIRST)
        self.stats: Counter = Counter()
        self.solutions: list[Solution] = []
        self.diagnostics: list[str] = []
        self.goal: Term | None = None
        self._next_id = 0
        self._scanned: set = set()
        self._extent: frozenset = frozenset()

    # -- tracing -------------------------------------------------------

    def _trace(self, event, item=None, parents=None, **extra):
        out = self.options.trace
        if out is None:
            return
        rec = {
            "event": event,
            "id": item.id if item is not None else None,
            "clause": str(item.clause) if item is not None else None,
            "index": str(item.index) if item is not None else None,
            "priority": priority_of(item).value if item is not None else None,
            "parents": list(parents if parents is not None
                            else (item.parents if item is not None else ())),
        }
        rec.update(extra)
        out.write(json.dumps(rec) + "\n")

    # -- agenda procedures ---------------------------------------------

    def add_to_agenda(self, item: Item) -> Item:
        item = replace(item, id=self._next_id)
        self._next_id += 1
        self.agenda.push(item)
        self.stats["agenda_add"] += 1
        self._trace("agenda_add", item)
        return item

    def initialize_agenda(self, goal: Term) -> Agenda:
        self.goal = goal
        for item in scan(goal, self.program, self.scheme, self.solver):
            self._queue_scanned(item)
        for item in scan_nonunits(self.program):
            item = self.add_to_agenda(item)
            self.stats["nonunit"] += 1
            self._trace("nonunit", item)
        return self.agenda

    def _queue_scanned(self, item: Item) -> bool:
        sig = item.signature()
        if sig in self._scanned:
            return False
        self._scanned.add(sig)
        self._extent |= coverage(item.index)
        item = self.add_to_agenda(item)
        self.stats["scan"] += 1
        self._trace("scan", item)
        return True

    def _step(self):
        self.stats["steps"] += 1
        if self.stats["steps"] > self.options.max_steps:
            self._budget(f"step budget of {self.options.max_steps} exhausted")

    def _budget(self, message):
        stats = dict(self.stats, chart=len(self.chart), agenda=len(self.agenda))
        self._trace("budget", message=message)
        raise BudgetExceeded(message, stats)

    def consume_agenda(self) -> Iterator[Solution]:
        while self.agenda:
            self._step()
            item = self.agenda.pop()
            yield from self.add_to_chart(item)

    def add_to_chart(self, item: Item) -> list[Solution]:
        sig = item.signature()
        if sig in self.chart.signatures:
            self.stats["duplicates"] += 1
            self._trace("duplicate", item)
            return []
        if self.options.subsume and self._subsumed(item):
            self.stats["subsumed"] += 1
            self._trace("duplicate", item, subsumed=True)
            return []
        self.chart.add(item, sig)
        self._trace("chart_add", item)
        if len(self.chart) > self.options.max_items:
            self._budget(f"item budget of {self.options.max_items} exhausted")

        found = []
        if item.is_unit:
            sol = self._check_solution(item)
            if sol is not None:
                found.append(sol)
            for nid in list(self.chart.nonunits.get(item.head_key(), ())):
                self._attempt(self.chart[nid], item)
        else:
            key = item.selected_key()
            if key is not None:
                for uid in list(self.chart.units.get(key, ())):
                    self._attempt(item, self.chart[uid])
        return found

    def _attempt(self, nonunit: Item, unit: Item) -> None:
        self._step()
        status, new, diag = try_reduce(nonunit, unit, self.solver, self.combine)
        self.stats["reduce_" + status] += 1
        if diag:
            self.diagnostics.append(diag)
        if new is None:
            self._trace("reduce_fail_" + status, None, parents=(nonunit.id, unit.id))
            return
        new = self.add_to_agenda(new)
        self._trace("reduce_ok", new)

    def _subsumed(self, item: Item) -> bool:
        if item.is_unit:
            bucket = self.chart.units.get(item.head_key(), ())
        else:
            bucket = self.chart.nonunits.get(item.selected_key(), ())
        general_of = item.clause.as_term()
        for other_id in bucket:
            other = self.chart[other_id]
            if other.index != item.index:
                continue
            self.stats["subsumption_checks"] += 1
            if subsumes(other.clause.as_term(), general_of):
                return True
        return False

    def _covers(self, index) -> bool:
        if isinstance(index, Free):
            return self.scheme == "free" or not self._extent
        return coverage(index) == self._extent

    def _check_solution(self, item: Item) -> Solution | None:
        b: dict = {}
        if not unify_into(self.goal, item.clause.head, b):
            return None
        if self.options.full_span and not self._covers(item.index):
            return None
        bindings = {}
        for v in term_vars(self.goal):
            if v.name and v.name != "_" and v.name not in bindings:
                bindings[v.name] = apply(b, v)
        sol = Solution(bindings, item.preference, item.id, apply(b, self.goal))
        self.solutions.append(sol)
        self._trace("solution", item)
        return sol

    # -- entry points --------------------------------------------------

    def prove(self, goal: Term | str) -> Iterator[Solution]:
        if isinstance(goal, str):
            goal = read_term(goal)
        self.initialize_agenda(goal)
        limit = self.options.max_solutions
        if self.options.mode == EXHAUSTIVE:
            found = list(self.consume_agenda())
            yield from found[:limit] if limit is not None else found
            return
        n = 0
        for sol in self.consume_agenda():
            yield sol
            n += 1
            if limit is not None and n >= limit:
                return

    def run(self, goal: Term | str) -> list[Solution]:
        return list(self.prove(goal))

    def extend_input(self, goal: Term | str) -> list[Solution]:
        """Switch to a goal whose input extends the previous one, scan only
        the base cases not seen before and resume deduction.  Returns every
        solution of the new goal."""
        if isinstance(goal, str):
            goal = read_term(goal)
        if self.goal is None:
            self.initialize_agenda(goal)
            return list(self.consume_agenda())
        self.goal = goal
        self.solutions = []
        for item in scan(goal, self.program, self.scheme, self.solver):
            self._queue_scanned(item)
        found = []
        for item in list(self.chart):
            if item.is_unit:
                sol = self._check_solution(item)
                if sol is not None:
                    found.append(sol)
        found.extend(self.consume_agenda())
        return found

    def extract_proof(self, root_id: int) -> ProofNode:
        if root_id not in self.chart:
            raise KeyError(f"no chart item #{root_id}")
        item = self.chart[root_id]
        children = []
        cur = item
        while cur.parents:
            nid, uid = cur.parents
            children.append(self.extract_proof(uid))
            cur = self.chart[nid]
        children.reverse()
        return ProofNode(item.id, cur.clause.source_id, item.clause.head, tuple(children))

    def unit_heads(self) -> list[Term]:
        return [it.clause.head for it in self.chart if it.is_unit]


def prove(goal: Term | str, program: Program, options: Options | None = None,
          **overrides) -> Iterator[Solution]:
    return Engine(program, options, **overrides).prove(goal)


def solve_inline(goals, bindings, program: Program, depth_bound: int = DEFAULT_DEPTH):
    """First top-down solution of ``goals`` as a composed substitution, or None."""
    try:
        res = Solver(program, depth_bound).solve_first(goals, bindings)
    except DepthExceeded as e:
        log.warning("inline goals abandoned: %s", e)
        return None
    return None if res is None else Subst(res[0])


__all__ = [
    "Agenda", "Chart", "Engine", "Item", "Options", "ProofNode", "Solution",
    "chart_bound", "prove", "reduce_mixed", "solve_inline", "try_reduce",
]
