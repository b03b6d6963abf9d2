"""Concrete term syntax: tokenizer, operator-precedence reader, printer.

Operators, loosest first::

    700 xfx   =  \\=  is  <  =<  >  >=
    600 xfy   &          (record conjunction)
    550 xfy   :          (feature:value)
    500 yfx   +  -
    400 yfx   *  /

``f:X`` and ``X & Y`` are read as plain ``:``/``&`` structures first; the
caller turns them into records with :func:`normalize`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .terms import (CONS, NIL, Atom, Avm, Num, Struct, Term, Var, apply,
                    fresh_var, make_list, resolve, unify_into)

INFIX = {
    "=": (700, "xfx"), "\\=": (700, "xfx"), "is": (700, "xfx"),
    "<": (700, "xfx"), "=<": (700, "xfx"), ">": (700, "xfx"), ">=": (700, "xfx"),
    "&": (600, "xfy"),
    ":": (550, "xfy"),
    "+": (500, "yfx"), "-": (500, "yfx"),
    "*": (400, "yfx"), "/": (400, "yfx"),
}
ARG_PREC = 999

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|%[^\n]*)
  | (?P<directive>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
  | (?P<atom>[a-z][A-Za-z0-9_]*)
  | (?P<qatom>'(?:[^'\\]|\\.)*')
  | (?P<end>\.(?=\s|%|$))
  | (?P<sym><-|\\=|=<|>=|[<>=:&+\-*/|,()\[\]{}])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str  # int var atom qatom end sym directive eof
    text: str
    line: int
    col: int
    funct: bool = False  # atom immediately followed by '('


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    at_line_start = True
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind, s = m.lastgroup, m.group()
        if kind == "directive" and not at_line_start:
            raise ParseError("directive must start a line", line, col)
        if kind != "ws":
            tok = Token(kind, s, line, col)
            if kind in ("atom", "qatom") and text.startswith("(", m.end()):
                tok.funct = True
            if kind == "qatom":
                tok.text = re.sub(r"\\(.)", r"\1", s[1:-1])
            tokens.append(tok)
            at_line_start = False
        nl = s.count("\n")
        if nl:
            line += nl
            line_start = m.start() + s.rindex("\n") + 1
            at_line_start = True
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class Reader:
    """Recursive-descent reader over a token list.  ``names`` maps variable
    names to variables for the clause currently being read."""

    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.names: dict[str, Var] = {}

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def advance(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at(self, text, kind="sym") -> bool:
        return self.tok.kind == kind and self.tok.text == text

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def _infix(self):
        t = self.tok
        if t.kind == "sym" and t.text in INFIX:
            return t.text
        if t.kind == "atom" and t.text in INFIX and not t.funct:
            return t.text
        return None

    def term(self, max_prec=ARG_PREC) -> Term:
        left = self.primary()
        left_prec = 0
        while True:
            op = self._infix()
            if op is None:
                return left
            prec, kind = INFIX[op]
            if prec > max_prec:
                return left
            left_max = prec if kind == "yfx" else prec - 1
            if left_prec > left_max:
                return left
            self.advance()
            right = self.term(prec if kind == "xfy" else prec - 1)
            left, left_prec = Struct(op, (left, right)), prec

    def primary(self) -> Term:
        t = self.advance()
        if t.kind == "int":
            return Num(int(t.text))
        if t.kind == "var":
            if t.text == "_":
                return fresh_var("_")
            v = self.names.get(t.text)
            if v is None:
                v = self.names[t.text] = fresh_var(t.text)
            return v
        if t.kind in ("atom", "qatom"):
            if t.funct:
                self.expect("(")
                args = [self.term()]
                while self.at(","):
                    self.advance()
                    args.append(self.term())
                self.expect(")")
                return Struct(t.text, tuple(args))
            return Atom(t.text)
        if t.kind == "sym" and t.text == "(":
            inner = self.term(ARG_PREC)
            self.expect(")")
            return inner
        if t.kind == "sym" and t.text == "[":
            if self.at("]"):
                self.advance()
                return NIL
            items = [self.term()]
            while self.at(","):
                self.advance()
                items.append(self.term())
            tail = NIL
            if self.at("|"):
                self.advance()
                tail = self.term()
            self.expect("]")
            return make_list(items, tail)
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.line, t.col)


def normalize(t: Term, b: dict, where=None) -> Term:
    """Turn ``f:V`` into records and unify the conjuncts of ``X & Y`` into ``b``."""
    if isinstance(t, Struct):
        if t.functor == ":" and len(t.args) == 2:
            name = t.args[0]
            if not isinstance(name, Atom):
                raise ParseError("feature name must be an atom", *(where or (None, None)))
            return Avm(((name.name, normalize(t.args[1], b, where)),), fresh_var())
        if t.functor == "&" and len(t.args) == 2:
            left = normalize(t.args[0], b, where)
            right = normalize(t.args[1], b, where)
            if not unify_into(left, right, b):
                raise ParseError("inconsistent conjunction", *(where or (None, None)))
            return left
        return Struct(t.functor, tuple(normalize(a, b, where) for a in t.args))
    return t


def read_term(text: str) -> Term:
    """Read one term (a trailing full stop is optional)."""
    reader = Reader(tokenize(text))
    t = reader.term()
    if reader.tok.kind == "end":
        reader.advance()
    if reader.tok.kind != "eof":
        raise reader.error(f"unexpected {reader.tok.text!r} after term")
    b: dict = {}
    return resolve(normalize(t, b), b)


# -- printing --------------------------------------------------------------

_PLAIN_ATOM = re.compile(r"^[a-z][A-Za-z0-9_]*$")


class Namer:
    """Gives every variable in one printed unit a distinct, stable name."""

    def __init__(self, shared_tails=frozenset()):
        self.names: dict[int, str] = {}
        self.used: set[str] = set()
        self.shared_tails = shared_tails
        self.anon = 0

    def name(self, v: Var) -> str:
        n = self.names.get(v.id)
        if n is not None:
            return n
        base = v.name if v.name and v.name != "_" else None
        if base is None:
            self.anon += 1
            base = f"_G{self.anon}"
        n, k = base, 1
        while n in self.used:
            k += 1
            n = f"{base}_{k}"
        self.used.add(n)
        self.names[v.id] = n
        return n


def shared_tails(terms) -> frozenset:
    """Record tails that occur more than once across ``terms``."""
    seen, shared = set(), set()
    for t in terms:
        for v in _tails(t):
            (shared if v.id in seen else seen).add(v.id)
    return frozenset(shared)


def _tails(t):
    stack = [t]
    while stack:
        t = stack.pop()
        if isinstance(t, Struct):
            stack.extend(t.args)
        elif isinstance(t, Avm):
            yield t.tail
            stack.extend(v for _, v in t.features)
        elif isinstance(t, Var):
            yield t


def fmt_atom(name: str) -> str:
    if name == "[]" or _PLAIN_ATOM.match(name) and name not in INFIX:
        return name
    return "'" + name.replace("\\", "\\\\").replace("'", "\\'") + "'"


def format_term(t: Term, namer: Namer | None = None, max_prec=ARG_PREC) -> str:
    if namer is None:
        namer = Namer(shared_tails([t]))
    text, prec = _fmt(t, namer)
    return f"({text})" if prec > max_prec else text


def _fmt(t: Term, namer: Namer) -> tuple[str, int]:
    if isinstance(t, Var):
        return namer.name(t), 0
    if isinstance(t, Num):
        return str(t.value), 0
    if isinstance(t, Atom):
        return fmt_atom(t.name), 0
    if isinstance(t, Avm):
        parts = [f"{fmt_atom(k)}:{format_term(v, namer, 550)}" for k, v in t.features]
        if t.tail.id in namer.shared_tails:
            parts.append(namer.name(t.tail))
        if len(parts) == 1:
            return parts[0], 550
        return " & ".join(parts), 600
    if t.functor == CONS and len(t.args) == 2:
        items, tail = [], t
        while isinstance(tail, Struct) and tail.functor == CONS and len(tail.args) == 2:
            items.append(format_term(tail.args[0], namer))
            tail = tail.args[1]
        text = ",".join(items)
        if tail != NIL:
            text += "|" + format_term(tail, namer)
        return f"[{text}]", 0
    if t.functor in INFIX and len(t.args) == 2:
        prec, kind = INFIX[t.functor]
        lmax = prec if kind == "yfx" else prec - 1
        rmax = prec if kind == "xfy" else prec - 1
        left = format_term(t.args[0], namer, lmax)
        right = format_term(t.args[1], namer, rmax)
        op = t.functor
        sep = f" {op} " if op in ("=", "\\=", "is", "<", "=<", ">", ">=", "&", "+") else op
        return f"{left}{sep}{right}", prec
    args = ",".join(format_term(a, namer) for a in t.args)
    return f"{fmt_atom(t.functor)}({args})", 0


def show(t: Term, bindings=None) -> str:
    """Print a term, resolving it under ``bindings`` first."""
    return format_term(apply(bindings, t))

