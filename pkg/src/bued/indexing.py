"""Item indices and the partial combination operation.

``combine(i1, i2)`` takes the index of the non-unit item first and the index
of the unit item second.  ``None`` means the combination is impossible (a
pruned deduction step); two non-free indices of different schemes raise
:class:`~bued.errors.IndexSchemeError`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexSchemeError


@dataclass(frozen=True)
class Free:
    def __str__(self):
        return "free"


FREE = Free()


@dataclass(frozen=True)
class WordSet:
    words: frozenset

    def __post_init__(self):
        if not self.words:
            raise ValueError("empty word set")
        if any(not isinstance(w, int) or w < 0 for w in self.words):
            raise ValueError(f"bad word occurrence ids {sorted(self.words)}")

    def __str__(self):
        return "words([" + ",".join(map(str, sorted(self.words))) + "])"


@dataclass(frozen=True)
class SpanSet:
    """Set of string segments; abutting segments are merged on construction."""

    spans: frozenset

    def __post_init__(self):
        ordered = sorted(self.spans)
        for b, e in ordered:
            if not 0 <= b < e:
                raise ValueError(f"bad span ({b},{e})")
        if any(e1 > b2 for (_, e1), (b2, _) in zip(ordered, ordered[1:])):
            raise ValueError(f"overlapping spans {ordered}")
        object.__setattr__(self, "spans", frozenset(_merge(ordered)))

    def __str__(self):
        return "spans([" + ",".join(f"span({b},{e})" for b, e in sorted(self.spans)) + "])"


@dataclass(frozen=True)
class UndirectedSpan:
    start: int
    end: int

    def __post_init__(self):
        _check_span(self.start, self.end)

    def __str__(self):
        return f"uspan({self.start},{self.end})"


@dataclass(frozen=True)
class DirectedSpan:
    start: int
    end: int

    def __post_init__(self):
        _check_span(self.start, self.end)

    def __str__(self):
        return f"span({self.start},{self.end})"


Index = Free | WordSet | SpanSet | UndirectedSpan | DirectedSpan

SCHEMES = {
    "nonreuse": WordSet,
    "nonadjacent": SpanSet,
    "nondirectional": UndirectedSpan,
    "directional": DirectedSpan,
    "free": Free,
}


def _check_span(b, e):
    if not (isinstance(b, int) and isinstance(e, int) and 0 <= b < e):
        raise ValueError(f"bad span ({b},{e})")


def _merge(ordered):
    out = []
    for b, e in ordered:
        if out and out[-1][1] == b:
            out[-1] = (out[-1][0], e)
        else:
            out.append((b, e))
    return out


def _overlap(x, y):
    return x[0] < y[1] and y[0] < x[1]


def combine(i1: Index, i2: Index) -> Index | None:
    if isinstance(i2, Free):
        return i1
    if isinstance(i1, Free):
        return i2
    if type(i1) is not type(i2):
        raise IndexSchemeError(f"cannot combine {i1} with {i2}")
    if isinstance(i1, WordSet):
        if i1.words & i2.words:
            return None
        return WordSet(i1.words | i2.words)
    if isinstance(i1, SpanSet):
        if any(_overlap(x, y) for x in i1.spans for y in i2.spans):
            return None
        return SpanSet(i1.spans | i2.spans)
    if isinstance(i1, UndirectedSpan):
        if i1.end == i2.start:
            return UndirectedSpan(i1.start, i2.end)
        if i2.end == i1.start:
            return UndirectedSpan(i2.start, i1.end)
        return None
    if i1.end == i2.start:
        return DirectedSpan(i1.start, i2.end)
    return None


def coverage(i: Index) -> frozenset:
    """String positions (or word ids) an index accounts for."""
    if isinstance(i, WordSet):
        return i.words
    if isinstance(i, SpanSet):
        return frozenset(p for b, e in i.spans for p in range(b, e))
    if isinstance(i, (UndirectedSpan, DirectedSpan)):
        return frozenset(range(i.start, i.end))
    return frozenset()
