"""The item record shared by the engine, the scanner and the oracle."""
from __future__ import annotations

from dataclasses import dataclass

from .indexing import FREE, Index
from .program import Clause
from .syntax import format_term
from .terms import pred_key, variant_key


@dataclass(frozen=True)
class Item:
    """A clause paired with an index.

    ``slots`` holds the preferences of the waiting goals consumed so far;
    ``preference`` is meaningful for unit items only.  ``parents`` is the
    (non-unit id, unit id) pair an item was derived from, empty for scanned
    and program items.
    """

    clause: Clause
    index: Index = FREE
    slots: tuple = ()
    preference: float = 1.0
    id: int = -1
    parents: tuple = ()

    @property
    def is_unit(self) -> bool:
        return self.clause.is_unit

    def signature(self):
        return (variant_key(self.clause.as_term()), self.index)

    def selected_key(self):
        k = self.clause.selected
        if k is None:
            return None
        return pred_key(self.clause.body[k].literal)

    def head_key(self):
        return pred_key(self.clause.head)

    def __str__(self):
        return f"<{self.clause}, {self.index}>"


def show_head(item: Item) -> str:
    return format_term(item.clause.head)
