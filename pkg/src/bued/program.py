"""Clauses, programs, the grammar-file reader and a validation pass."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import preferences
from .errors import ParseError
from .indexing import SCHEMES
from .preferences import DEFAULT, Formula, PrefAnnotation, Value
from .syntax import Namer, Reader, format_term, normalize, shared_tails, tokenize
from .terms import Struct, Term, is_callable, pred_key, resolve

WAITING = "waiting"
INLINE = "inline"

LOOKUP = ("lookup", 2)
# predicates answered by the inline solver without a program definition
BUILTINS = {
    ("=", 2), ("\\=", 2), ("is", 2), ("<", 2), ("=<", 2), (">", 2), (">=", 2),
    ("true", 0), ("fail", 0),
    ("member", 2), ("append", 3), ("nth_member", 4),
}


@dataclass(frozen=True)
class Goal:
    literal: Term
    mode: str = WAITING

    @property
    def inline(self) -> bool:
        return self.mode == INLINE


@dataclass(frozen=True)
class Clause:
    head: Term
    body: tuple = ()
    pref: PrefAnnotation = DEFAULT
    source_id: str = ""

    @property
    def is_unit(self) -> bool:
        return not self.body

    @property
    def selected(self) -> int | None:
        """Position of the leftmost waiting goal, if any."""
        for i, g in enumerate(self.body):
            if not g.inline:
                return i
        return None

    def waiting_count(self) -> int:
        return sum(1 for g in self.body if not g.inline)

    def map_terms(self, fn: Callable[[Term], Term]) -> "Clause":
        return Clause(fn(self.head), tuple(Goal(fn(g.literal), g.mode) for g in self.body),
                      self.pref, self.source_id)

    def as_term(self) -> Term:
        goals = tuple(Struct("$inline", (g.literal,)) if g.inline else g.literal
                      for g in self.body)
        return Struct("$clause", (self.head,) + goals)

    def __str__(self):
        return format_clause(self)


@dataclass(frozen=True)
class Program:
    clauses: tuple = ()
    lookup_clauses: tuple = ()
    directives: dict = field(default_factory=dict)

    @property
    def scheme(self) -> str:
        return self.directives.get("scheme", "directional")

    def all_clauses(self):
        return self.clauses + self.lookup_clauses

    def nonunits(self):
        return [c for c in self.clauses if not c.is_unit]


@dataclass(frozen=True)
class Diagnostic:
    level: str  # error | warning
    message: str
    source_id: str = ""

    def __str__(self):
        where = f"{self.source_id}: " if self.source_id else ""
        return f"{self.level}: {where}{self.message}"


# -- reading ---------------------------------------------------------------

def _check_goal(t: Term, tok, what="goal"):
    if not is_callable(t):
        raise ParseError(f"{what} must be an atom or compound term", tok.line, tok.col)


def parse_program(text: str, name: str = "<string>") -> Program:
    reader = Reader(tokenize(text))
    clauses, lookups = [], []
    directives: dict = {}
    pending_pref = None  # (annotation, token)

    while reader.tok.kind != "eof":
        tok = reader.tok
        if tok.kind == "directive":
            reader.advance()
            key, _, arg = tok.text[1:].strip().partition(" ")
            arg = arg.strip()
            if key in ("scheme", "index"):
                if "scheme" in directives:
                    raise ParseError("duplicate #scheme directive", tok.line, tok.col)
                if arg not in SCHEMES:
                    raise ParseError(f"unknown indexing scheme {arg!r}", tok.line, tok.col)
                directives["scheme"] = arg
            elif key == "pref":
                if pending_pref is not None:
                    raise ParseError("duplicate #pref directive", tok.line, tok.col)
                try:
                    pending_pref = (preferences.parse_pref(arg), tok)
                except ValueError as e:
                    raise ParseError(str(e), tok.line, tok.col) from None
            else:
                raise ParseError(f"unknown directive #{key}", tok.line, tok.col)
            continue

        reader.names = {}
        head = reader.term()
        body = []
        if reader.at("<-"):
            reader.advance()
            if reader.tok.kind == "end":
                raise reader.error("empty body; write a unit clause as 'Head.'")
            while True:
                if reader.at("{"):
                    reader.advance()
                    while True:
                        gtok = reader.tok
                        body.append((Goal(reader.term(), INLINE), gtok))
                        if not reader.at(","):
                            break
                        reader.advance()
                    reader.expect("}")
                else:
                    gtok = reader.tok
                    body.append((Goal(reader.term(), WAITING), gtok))
                if not reader.at(","):
                    break
                reader.advance()
        if reader.tok.kind != "end":
            found = reader.tok.text or "end of input"
            raise reader.error(f"expected '.', found {found!r}")
        reader.advance()

        b: dict = {}
        where = (tok.line, tok.col)
        head = normalize(head, b, where)
        body = [(Goal(normalize(g.literal, b, where), g.mode), t) for g, t in body]
        head = resolve(head, b)
        _check_goal(head, tok, "clause head")
        goals = []
        for g, t in body:
            lit = resolve(g.literal, b)
            _check_goal(lit, t)
            goals.append(Goal(lit, g.mode))

        pref = DEFAULT
        if pending_pref is not None:
            pref, ptok = pending_pref
            pending_pref = None
            if goals and isinstance(pref, Value):
                raise ParseError("numeric #pref on a non-unit clause", ptok.line, ptok.col)
            if not goals and isinstance(pref, Formula):
                raise ParseError("#pref formula on a unit clause", ptok.line, ptok.col)
            if isinstance(pref, Formula) and pref.op == "wsum":
                n = sum(1 for g in goals if not g.inline)
                if len(pref.weights) != n:
                    raise ParseError(f"wsum has {len(pref.weights)} weights for {n} waiting goals",
                                     ptok.line, ptok.col)
        clause = Clause(head, tuple(goals), pref, f"{name}:{tok.line}")
        (lookups if pred_key(head) == LOOKUP else clauses).append(clause)

    if pending_pref is not None:
        ptok = pending_pref[1]
        raise ParseError("#pref directive not followed by a clause", ptok.line, ptok.col)
    return Program(tuple(clauses), tuple(lookups), directives)


def load_program(path) -> Program:
    with open(path, encoding="utf-8") as f:
        return parse_program(f.read(), name=str(path))


# -- printing --------------------------------------------------------------

def format_clause(c: Clause) -> str:
    terms = [c.head] + [g.literal for g in c.body]
    namer = Namer(shared_tails(terms))
    text = format_term(c.head, namer)
    if c.body:
        goals = []
        for g in c.body:
            s = format_term(g.literal, namer)
            goals.append("{" + s + "}" if g.inline else s)
        text += " <- " + ", ".join(goals)
    return text + "."


def format_program(p: Program) -> str:
    lines = []
    if "scheme" in p.directives:
        lines.append(f"#scheme {p.directives['scheme']}")
    for c in p.clauses + p.lookup_clauses:
        if c.pref is not DEFAULT:
            lines.append(f"#pref {c.pref}")
        lines.append(format_clause(c))
    return "\n".join(lines) + "\n"


# -- validation ------------------------------------------------------------

def _lookup_products(p: Program) -> set | None:
    """Predicate keys of base cases that lookup/2 can hand to the chart, or
    None when some lookup clause builds its base case at run time."""
    keys = set()
    for c in p.lookup_clauses:
        result = c.head.args[1]
        if isinstance(result, Struct) and result.functor == "item" and len(result.args) == 2:
            result = result.args[0]
        k = pred_key(result)
        if k is None:
            return None
        keys.add(k)
    return keys


def validate(p: Program, proving: bool = False) -> list[Diagnostic]:
    diags = []
    if not p.clauses and not p.lookup_clauses:
        diags.append(Diagnostic("warning", "no clauses"))
    if proving and not p.lookup_clauses:
        diags.append(Diagnostic("warning", "no lookup/2 clauses; nothing will be scanned"))
    defined = {pred_key(c.head) for c in p.all_clauses()}
    products = _lookup_products(p)
    for key in sorted(defined & BUILTINS):
        diags.append(Diagnostic("warning", f"program definition of {key[0]}/{key[1]} "
                                           "shadows the built-in"))
    for c in p.all_clauses():
        in_lookup = pred_key(c.head) == LOOKUP
        for g in c.body:
            key = pred_key(g.literal)
            if g.inline or in_lookup:
                if key not in defined and key not in BUILTINS:
                    diags.append(Diagnostic(
                        "error", f"inline goal {key[0]}/{key[1]} has no definition",
                        c.source_id))
            elif (products is not None and key not in defined | products
                  and key not in BUILTINS):
                diags.append(Diagnostic(
                    "warning", f"waiting goal {key[0]}/{key[1]} is never defined", c.source_id))
    return diags
