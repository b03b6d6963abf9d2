"""First-order terms with open attribute-value matrices.

Terms are immutable values.  Substitutions are kept in triangular form
(a variable may be bound to a term that mentions other bound variables) and
are only fully resolved by :func:`apply`.

An :class:`Avm` is an open record: a set of feature/value pairs plus a tail
variable standing for "any further features".  Unifying two Avms unifies the
shared features and binds the tails so that both sides end up with the union
of the features.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class Num:
    value: int


@dataclass(frozen=True, slots=True)
class Var:
    id: int
    name: str | None = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class Struct:
    functor: str
    args: tuple


@dataclass(frozen=True, slots=True)
class Avm:
    features: tuple  # sorted ((name, Term), ...)
    tail: Var


Term = Union[Atom, Num, Var, Struct, Avm]

NIL = Atom("[]")
CONS = "."


class VarSupply:
    """Counter handing out variables with unique ids."""

    def __init__(self, start: int = 0):
        self._ids = itertools.count(start)

    def fresh(self, name: str | None = None) -> Var:
        return Var(next(self._ids), name)


_supply = VarSupply()


def fresh_var(name: str | None = None) -> Var:
    return _supply.fresh(name)


def default_supply() -> VarSupply:
    return _supply


def cons(head: Term, tail: Term) -> Struct:
    return Struct(CONS, (head, tail))


def make_list(items: Iterable[Term], tail: Term = NIL) -> Term:
    out = tail
    for item in reversed(list(items)):
        out = cons(item, out)
    return out


def list_items(t: Term, bindings: Mapping | None = None) -> tuple[list, Term]:
    """Split a (possibly partial) list into its elements and its tail."""
    b = bindings or {}
    items = []
    t = walk(t, b)
    while isinstance(t, Struct) and t.functor == CONS and len(t.args) == 2:
        items.append(t.args[0])
        t = walk(t.args[1], b)
    return items, t


def avm(features: Mapping[str, Term], tail: Var | None = None) -> Term:
    if not features:
        return tail if tail is not None else fresh_var()
    return Avm(tuple(sorted(features.items())), tail if tail is not None else fresh_var())


def is_callable(t: Term) -> bool:
    return isinstance(t, (Atom, Struct))


def pred_key(t: Term) -> tuple[str, int] | None:
    if isinstance(t, Atom):
        return (t.name, 0)
    if isinstance(t, Struct):
        return (t.functor, len(t.args))
    return None


# -- substitutions --------------------------------------------------------

class Subst(Mapping):
    """Immutable mapping from variable ids to terms."""

    __slots__ = ("bindings",)

    def __init__(self, bindings: Mapping[int, Term] | None = None):
        self.bindings = dict(bindings or {})

    def __getitem__(self, key):
        if isinstance(key, Var):
            key = key.id
        return self.bindings[key]

    def __iter__(self):
        return iter(self.bindings)

    def __len__(self):
        return len(self.bindings)

    def __repr__(self):
        return f"Subst({self.bindings!r})"

    def resolved(self) -> "Subst":
        """Idempotent form: every binding fully applied."""
        return Subst({k: resolve(v, self.bindings) for k, v in self.bindings.items()})


def _bindings(s) -> Mapping[int, Term]:
    if s is None:
        return {}
    if isinstance(s, Subst):
        return s.bindings
    return s


def walk(t: Term, b: Mapping[int, Term]) -> Term:
    while isinstance(t, Var) and t.id in b:
        t = b[t.id]
    return t


def _avm_view(t: Avm, b: Mapping[int, Term]) -> tuple[dict, Var]:
    feats: dict = {}
    while True:
        for k, v in t.features:
            feats[k] = v
        tail = walk(t.tail, b)
        if isinstance(tail, Avm):
            t = tail
            continue
        if not isinstance(tail, Var):
            raise TypeError(f"record tail bound to non-record {tail!r}")
        return feats, tail


def resolve(t: Term, b: Mapping[int, Term]) -> Term:
    t = walk(t, b)
    if isinstance(t, Struct):
        return Struct(t.functor, tuple(resolve(a, b) for a in t.args))
    if isinstance(t, Avm):
        feats, tail = _avm_view(t, b)
        return Avm(tuple(sorted((k, resolve(v, b)) for k, v in feats.items())), tail)
    return t


def apply(s, t: Term) -> Term:
    return resolve(t, _bindings(s))


def occurs(var_id: int, t: Term, b: Mapping[int, Term]) -> bool:
    stack = [t]
    while stack:
        t = walk(stack.pop(), b)
        if isinstance(t, Var):
            if t.id == var_id:
                return True
        elif isinstance(t, Struct):
            stack.extend(t.args)
        elif isinstance(t, Avm):
            feats, tail = _avm_view(t, b)
            if tail.id == var_id:
                return True
            stack.extend(feats.values())
    return False


def _bind(v: Var, t: Term, b: dict) -> bool:
    if occurs(v.id, t, b):
        return False
    b[v.id] = t
    return True


def unify_into(x: Term, y: Term, b: dict) -> bool:
    """Unify in place; ``b`` may be partially extended on failure."""
    stack = [(x, y)]
    while stack:
        x, y = stack.pop()
        x = walk(x, b)
        y = walk(y, b)
        if x is y or (isinstance(x, Var) and isinstance(y, Var) and x.id == y.id):
            continue
        if isinstance(x, Var):
            if not _bind(x, y, b):
                return False
        elif isinstance(y, Var):
            if not _bind(y, x, b):
                return False
        elif isinstance(x, Struct):
            if not (isinstance(y, Struct) and x.functor == y.functor
                    and len(x.args) == len(y.args)):
                return False
            stack.extend(zip(x.args, y.args))
        elif isinstance(x, Avm):
            if not isinstance(y, Avm):
                return False
            fx, tx = _avm_view(x, b)
            fy, ty = _avm_view(y, b)
            only_x = {k: v for k, v in fx.items() if k not in fy}
            only_y = {k: v for k, v in fy.items() if k not in fx}
            if tx.id == ty.id:
                if only_x or only_y:
                    return False
            elif not only_x and not only_y:
                b[tx.id] = ty
            elif not only_x:
                if not _bind(tx, Avm(tuple(sorted(only_y.items())), ty), b):
                    return False
            elif not only_y:
                if not _bind(ty, Avm(tuple(sorted(only_x.items())), tx), b):
                    return False
            else:
                rest = fresh_var()
                if not _bind(tx, Avm(tuple(sorted(only_y.items())), rest), b):
                    return False
                if not _bind(ty, Avm(tuple(sorted(only_x.items())), rest), b):
                    return False
            stack.extend((fx[k], fy[k]) for k in fx if k in fy)
        elif x != y:
            return False
    return True


def unify(a: Term, b: Term, s=None) -> Subst | None:
    """Most general unifier of ``a`` and ``b`` extending ``s``, or None."""
    bindings = dict(_bindings(s))
    if unify_into(a, b, bindings):
        return Subst(bindings)
    return None


# -- variables, renaming, variants ----------------------------------------

def term_vars(t: Term, b: Mapping[int, Term] | None = None) -> Iterator[Var]:
    """Unbound variables of ``t`` in depth-first, left-to-right order (with repeats)."""
    b = b or {}
    stack = [t]
    while stack:
        t = walk(stack.pop(), b)
        if isinstance(t, Var):
            yield t
        elif isinstance(t, Struct):
            stack.extend(reversed(t.args))
        elif isinstance(t, Avm):
            feats, tail = _avm_view(t, b)
            stack.append(tail)
            stack.extend(feats[k] for k in sorted(feats, reverse=True))


def rename_term(t: Term, mapping: dict, supply: VarSupply | None = None) -> Term:
    supply = supply or _supply
    if isinstance(t, Var):
        v = mapping.get(t.id)
        if v is None:
            v = mapping[t.id] = supply.fresh(t.name)
        return v
    if isinstance(t, Struct):
        return Struct(t.functor, tuple(rename_term(a, mapping, supply) for a in t.args))
    if isinstance(t, Avm):
        return Avm(tuple((k, rename_term(v, mapping, supply)) for k, v in t.features),
                   rename_term(t.tail, mapping, supply))
    return t


def rename_apart(obj, fresh: VarSupply | None = None):
    """Alphabetic variant of a term, or of anything exposing ``map_terms``,
    sharing no variables with anything issued before."""
    mapping: dict = {}
    if hasattr(obj, "map_terms"):
        return obj.map_terms(lambda t: rename_term(t, mapping, fresh))
    return rename_term(obj, mapping, fresh)


def variant_key(t: Term, numbering: dict | None = None):
    """Hashable canonical form; equal keys iff the terms are variants."""
    numbering = {} if numbering is None else numbering

    def key(t):
        if isinstance(t, Var):
            n = numbering.get(t.id)
            if n is None:
                n = numbering[t.id] = len(numbering)
            return ("$V", n)
        if isinstance(t, Atom):
            return t.name
        if isinstance(t, Num):
            return ("$N", t.value)
        if isinstance(t, Struct):
            return (t.functor,) + tuple(key(a) for a in t.args)
        if isinstance(t, Avm):
            return ("$AVM",) + tuple((k, key(v)) for k, v in t.features) + (key(t.tail),)
        raise TypeError(f"not a term: {t!r}")

    return key(t)


def is_variant(a: Term, b: Term) -> bool:
    return variant_key(apply(None, a)) == variant_key(apply(None, b))


def subsumes(general: Term, specific: Term) -> bool:
    """True iff ``specific`` is an instance of ``general``."""
    general = rename_apart(general)
    s = unify(general, specific)
    if s is None:
        return False
    return variant_key(apply(s, specific)) == variant_key(apply(None, specific))


def is_ground(t: Term) -> bool:
    return next(term_vars(t), None) is None


def is_cyclic(t: Term, s=None) -> bool:
    """True if resolving ``t`` under ``s`` would not terminate."""
    b = _bindings(s)

    def visit(t, active):
        t = walk(t, b) if not isinstance(t, Var) else t
        if isinstance(t, Var):
            if t.id in active:
                return True
            if t.id in b:
                return visit(b[t.id], active | {t.id})
            return False
        if isinstance(t, Struct):
            return any(visit(a, active) for a in t.args)
        if isinstance(t, Avm):
            return any(visit(v, active) for _, v in t.features) or visit(t.tail, active)
        return False

    return visit(t, frozenset())

