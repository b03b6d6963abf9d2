"""Bottom-up Earley deduction with indexed items, inline goals and preferences."""
from .engine import BEST_FIRST, EXHAUSTIVE, Engine, Options, Solution, prove
from .indexing import FREE, DirectedSpan, SpanSet, UndirectedSpan, WordSet, combine
from .oracle import enumerate_bracketings, naive_closure
from .program import Clause, Goal, Program, load_program, parse_program, validate
from .syntax import format_term, read_term
from .terms import Atom, Avm, Num, Struct, Var, unify

__all__ = [
    "BEST_FIRST", "EXHAUSTIVE", "Engine", "Options", "Solution", "prove",
    "FREE", "DirectedSpan", "SpanSet", "UndirectedSpan", "WordSet", "combine",
    "enumerate_bracketings", "naive_closure",
    "Clause", "Goal", "Program", "load_program", "parse_program", "validate",
    "format_term", "read_term", "Atom", "Avm", "Num", "Struct", "Var", "unify",
]
