"""Preference annotations and agenda priorities.

Unit clauses carry a number in [0, 1].  Non-unit clauses carry a monotone
combinator over the preferences of their waiting goals, one slot per waiting
goal in body order.  A partially reduced clause gets the combinator's value
with the unresolved slots set to 1.0, which is the largest preference any of
its completions can reach.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

MAX_PREF = 1.0


@dataclass(frozen=True)
class Value:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"preference {self.p} outside [0,1]")

    def __str__(self):
        return repr(self.p)


@dataclass(frozen=True)
class Formula:
    op: str  # mul | min | wsum
    weights: tuple = ()

    def __post_init__(self):
        if self.op not in ("mul", "min", "wsum"):
            raise ValueError(f"unknown preference combinator {self.op!r}")
        if self.op == "wsum":
            if not self.weights or any(w < 0 for w in self.weights):
                raise ValueError("wsum needs nonnegative weights")
        elif self.weights:
            raise ValueError(f"{self.op} takes no weights")

    def __str__(self):
        if self.op == "wsum":
            return "wsum(" + ",".join(repr(w) for w in self.weights) + ")"
        return self.op


@dataclass(frozen=True)
class Default:
    def __str__(self):
        return "default"


DEFAULT = Default()

PrefAnnotation = Value | Formula | Default

_WSUM = re.compile(r"^wsum\((.*)\)$")


def parse_pref(text: str) -> PrefAnnotation:
    text = text.strip()
    if text in ("mul", "min"):
        return Formula(text)
    m = _WSUM.match(text)
    if m:
        try:
            weights = tuple(float(w) for w in m.group(1).split(","))
        except ValueError:
            raise ValueError(f"bad wsum weights in {text!r}") from None
        return Formula("wsum", weights)
    try:
        p = float(text)
    except ValueError:
        raise ValueError(f"bad preference annotation {text!r}") from None
    return Value(p)


def resolve_pref(ann: PrefAnnotation, solved) -> float:
    solved = list(solved)
    if isinstance(ann, Value):
        return ann.p
    if isinstance(ann, Default) or ann.op == "mul":
        v = math.prod(solved)
    elif ann.op == "min":
        v = min(solved, default=MAX_PREF)
    else:
        if len(ann.weights) != len(solved):
            raise AssertionError(
                f"wsum over {len(ann.weights)} slots given {len(solved)} values")
        v = sum(w * x for w, x in zip(ann.weights, solved))
    return min(MAX_PREF, max(0.0, v))


@dataclass(frozen=True)
class Priority:
    """Agenda key.  Higher value first, earlier sequence number among ties."""

    value: float
    seq: int

    def sort_key(self):
        return (-self.value, self.seq)


def priority_of(item) -> Priority:
    if item.clause.is_unit:
        return Priority(item.preference, item.id)
    pending = sum(1 for g in item.clause.body if not g.inline)
    value = resolve_pref(item.clause.pref, tuple(item.slots) + (MAX_PREF,) * pending)
    return Priority(value, item.id)
