"""Depth-first SLD resolution for inline goals and for lookup/2.

Every body goal of a clause called here is run top-down, whatever its
marking in the grammar file.  The search is iterative (an explicit stack of
choice points) and bounded by a number of resolution steps per query.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterator

from .errors import DepthExceeded, EvaluationError, InstantiationError
from .preferences import Value
from .program import Clause, Program, parse_program
from .terms import Num, Struct, Term, Var, pred_key, rename_apart, unify_into, walk

DEFAULT_DEPTH = 10_000

PRELUDE = parse_program("""
member(X, [X|_]).
member(X, [_|T]) <- member(X, T).
append([], L, L).
append([H|T], L, [H|R]) <- append(T, L, R).
nth_member(X, 0, 1, [X|_]).
nth_member(X, N1, N2, [_|R]) <- nth_member(X, N0, N1, R), N2 is N1 + 1.
""", name="<prelude>")


def evaluate(t: Term, b) -> int:
    t = walk(t, b)
    if isinstance(t, Num):
        return t.value
    if isinstance(t, Var):
        raise InstantiationError("arithmetic on an unbound variable")
    if isinstance(t, Struct) and len(t.args) == 2 and t.functor in ("+", "-", "*"):
        x, y = evaluate(t.args[0], b), evaluate(t.args[1], b)
        return {"+": x + y, "-": x - y, "*": x * y}[t.functor]
    raise EvaluationError(f"cannot evaluate {t!r}")


_COMPARE = {
    "<": lambda x, y: x < y, "=<": lambda x, y: x <= y,
    ">": lambda x, y: x > y, ">=": lambda x, y: x >= y,
}


def _native(goal: Struct | Term, b: dict):
    """Solutions of a native built-in as a list of binding dicts, or None if
    ``goal`` is not native."""
    key = pred_key(goal)
    if key == ("true", 0):
        return [b]
    if key == ("fail", 0):
        return []
    if key is None or key[1] != 2:
        return None
    op = goal.functor
    x, y = goal.args
    if op == "=":
        b2 = dict(b)
        return [b2] if unify_into(x, y, b2) else []
    if op == "\\=":
        return [] if unify_into(x, y, dict(b)) else [b]
    if op == "is":
        b2 = dict(b)
        return [b2] if unify_into(x, Num(evaluate(y, b)), b2) else []
    if op in _COMPARE:
        return [b] if _COMPARE[op](evaluate(x, b), evaluate(y, b)) else []
    return None


class Solver:
    def __init__(self, program: Program | None = None, depth_bound: int = DEFAULT_DEPTH):
        self.depth_bound = depth_bound
        self.db: dict = defaultdict(list)
        user = program.all_clauses() if program is not None else ()
        for c in user:
            self.db[pred_key(c.head)].append(c)
        for c in PRELUDE.clauses:
            key = pred_key(c.head)
            if key not in self.db or all(d.source_id.startswith("<prelude>")
                                         for d in self.db[key]):
                self.db[key].append(c)

    def solve(self, goals, bindings=None) -> Iterator[tuple[dict, float]]:
        """All solutions, depth first, as (bindings, preference) pairs.

        The preference of a solution is the product of the numeric
        preferences of the unit clauses it used."""
        chain = None
        for g in reversed(list(goals)):
            chain = (g, chain)
        steps = 0
        stack = [iter([(chain, dict(bindings or {}), 1.0)])]
        while stack:
            state = next(stack[-1], None)
            if state is None:
                stack.pop()
                continue
            chain, b, pref = state
            if chain is None:
                yield b, pref
                continue
            steps += 1
            if steps > self.depth_bound:
                raise DepthExceeded(self.depth_bound)
            goal, rest = chain
            stack.append(self._expand(walk(goal, b), rest, b, pref))

    def _expand(self, goal, rest, b, pref):
        key = pred_key(goal)
        if key is None:
            raise InstantiationError(f"goal is not callable: {goal!r}")
        if key not in self.db:
            native = _native(goal, b)
            if native is not None:
                for b2 in native:
                    yield rest, b2, pref
                return
        for clause in self.db.get(key, ()):
            c: Clause = rename_apart(clause)
            b2 = dict(b)
            if not unify_into(goal, c.head, b2):
                continue
            chain = rest
            for g in reversed(c.body):
                chain = (g.literal, chain)
            p = pref * c.pref.p if isinstance(c.pref, Value) else pref
            yield chain, b2, p

    def solve_first(self, goals, bindings=None) -> tuple[dict, float] | None:
        return next(self.solve(goals, bindings), None)
