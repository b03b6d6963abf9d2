"""Scanning: base-case items for a goal, and the program's non-unit items.

A lookup/2 clause relates a goal to a base case, either a bare clause head
(indexed ``free``) or ``item(Head, IndexLiteral)``.  Index literals are
``free``, ``span(B,E)``, ``uspan(B,E)``, ``spans([span(B,E),...])``,
``words([I,...])`` or the generic ``B-E``, which is read according to the
active indexing scheme.
"""
from __future__ import annotations

from typing import Iterator

from .errors import DepthExceeded, ScanError
from .indexing import (FREE, SCHEMES, DirectedSpan, Free, Index, SpanSet,
                       UndirectedSpan, WordSet)
from .items import Item
from .preferences import Value
from .program import Clause, Program
from .solver import Solver
from .syntax import format_term
from .terms import (Atom, Num, Struct, Term, apply, fresh_var, is_callable,
                    list_items, rename_apart, unify_into)


def _int(t: Term) -> int:
    if not isinstance(t, Num):
        raise ScanError(f"index position is not an integer: {format_term(t)}")
    return t.value


def _pair(t: Term) -> tuple[int, int]:
    if isinstance(t, Struct) and t.functor in ("span", "uspan", "-") and len(t.args) == 2:
        return _int(t.args[0]), _int(t.args[1])
    raise ScanError(f"malformed span literal {format_term(t)}")


def _positions(t: Term) -> list:
    items, tail = list_items(t)
    if tail != Atom("[]"):
        raise ScanError(f"index list is not a proper list: {format_term(t)}")
    return items


def index_from_literal(t: Term, scheme: str = "directional") -> Index:
    """Interpret an index literal under ``scheme``."""
    if scheme not in SCHEMES:
        raise ScanError(f"unknown indexing scheme {scheme!r}")
    try:
        if t == Atom("free"):
            return FREE
        if isinstance(t, Struct) and t.functor == "-" and len(t.args) == 2:
            b, e = _pair(t)
            idx = {
                "directional": lambda: DirectedSpan(b, e),
                "nondirectional": lambda: UndirectedSpan(b, e),
                "nonadjacent": lambda: SpanSet(frozenset([(b, e)])),
                "nonreuse": lambda: WordSet(frozenset(range(b, e))),
                "free": lambda: FREE,
            }[scheme]()
        elif isinstance(t, Struct) and t.functor == "span" and len(t.args) == 2:
            idx = DirectedSpan(*_pair(t))
        elif isinstance(t, Struct) and t.functor == "uspan" and len(t.args) == 2:
            idx = UndirectedSpan(*_pair(t))
        elif isinstance(t, Struct) and t.functor == "spans" and len(t.args) == 1:
            idx = SpanSet(frozenset(_pair(s) for s in _positions(t.args[0])))
        elif isinstance(t, Struct) and t.functor == "words" and len(t.args) == 1:
            idx = WordSet(frozenset(_int(w) for w in _positions(t.args[0])))
        else:
            raise ScanError(f"malformed index literal {format_term(t)}")
    except ValueError as e:
        raise ScanError(f"bad index literal {format_term(t)}: {e}") from None
    if scheme == "free":
        return FREE
    if not isinstance(idx, (Free, SCHEMES[scheme])):
        raise ScanError(f"index literal {format_term(t)} does not fit scheme {scheme}")
    return idx


def scan(goal: Term, program: Program, scheme: str | None = None,
         solver: Solver | None = None) -> list[Item]:
    """Base-case unit items for ``goal``, in lookup solution order, without
    variant duplicates (the better-preferred copy is kept)."""
    scheme = scheme or program.scheme
    solver = solver or Solver(program)
    found: dict = {}
    for lc in program.lookup_clauses:
        c = rename_apart(lc)
        result = fresh_var("Result")
        b: dict = {}
        if not unify_into(c.head, Struct("lookup", (goal, result)), b):
            continue
        try:
            for sol, pref in solver.solve([g.literal for g in c.body], b):
                out = apply(sol, result)
                if isinstance(out, Struct) and out.functor == "item" and len(out.args) == 2:
                    head, idx = out.args[0], index_from_literal(out.args[1], scheme)
                else:
                    head, idx = out, FREE
                if not is_callable(head):
                    raise ScanError(f"{lc.source_id}: lookup produced a non-callable "
                                    f"base case {format_term(head)}")
                clause = rename_apart(Clause(head, (), Value(pref), lc.source_id))
                item = Item(clause, idx, preference=pref)
                sig = item.signature()
                if sig not in found or found[sig].preference < pref:
                    found[sig] = item
        except DepthExceeded as e:
            raise ScanError(f"{lc.source_id}: lookup exceeded {e.bound} resolution steps") from e
    return list(found.values())


def scan_nonunits(program: Program) -> list[Item]:
    return [Item(rename_apart(c), FREE) for c in program.clauses if not c.is_unit]


def builtin(goal: Term, bindings=None) -> Iterator[dict]:
    """Solutions of one built-in goal under ``bindings``."""
    for b, _ in Solver().solve([goal], bindings):
        yield b
