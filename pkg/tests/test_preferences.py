from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from bued.items import Item
from bued.preferences import DEFAULT, Formula, Value, parse_pref, priority_of, resolve_pref
from bued.program import parse_program


def item(text, slots=(), pref=1.0):
    return Item(parse_program(text).clauses[0], slots=slots, preference=pref)


def test_unit_priority_is_its_preference():
    assert priority_of(item("#pref 0.9\nw(a).", pref=0.9)).value == 0.9


def test_pending_slots_count_as_one():
    it = item("#pref mul\ns(X) <- np(X), vp(X).")
    assert priority_of(it).value == 1.0
    half = replace(it, clause=replace(it.clause, body=it.clause.body[1:]), slots=(0.5,))
    assert priority_of(half).value == 0.5


def test_inline_goals_have_no_slot():
    it = item("#pref mul\ns(X) <- np(X), {X = a}, vp(X).", slots=())
    assert priority_of(it).value == 1.0


@pytest.mark.parametrize("ann,solved,expected", [
    (Formula("mul"), [0.9, 0.1], 0.09),
    (Formula("min"), [0.3, 0.7], 0.3),
    (Formula("wsum", (0.5, 0.5)), [1.0, 0.0], 0.5),
    (DEFAULT, [0.5, 0.5], 0.25),
    (Formula("min"), [], 1.0),
    (Formula("wsum", (1.0, 1.0)), [0.8, 0.8], 1.0),
    (Value(0.4), [], 0.4),
])
def test_resolve(ann, solved, expected):
    assert resolve_pref(ann, solved) == pytest.approx(expected)


def test_wsum_arity_mismatch_is_internal_error():
    with pytest.raises(AssertionError):
        resolve_pref(Formula("wsum", (0.5, 0.5)), [1.0])


@pytest.mark.parametrize("text,expected", [
    ("0.25", Value(0.25)), ("mul", Formula("mul")), ("min", Formula("min")),
    ("wsum(0.2, 0.8)", Formula("wsum", (0.2, 0.8))),
])
def test_parse_pref(text, expected):
    assert parse_pref(text) == expected


@pytest.mark.parametrize("text", ["1.5", "-0.1", "max", "wsum(a)", "wsum(-1)", ""])
def test_parse_pref_rejects(text):
    with pytest.raises(ValueError):
        parse_pref(text)


prefs = st.floats(0, 1)


@given(st.lists(prefs, min_size=1, max_size=4), st.sampled_from(["mul", "min"]))
def test_partial_value_bounds_completion(values, op):
    f = Formula(op)
    full = resolve_pref(f, values)
    for k in range(len(values) + 1):
        partial = resolve_pref(f, values[:k] + [1.0] * (len(values) - k))
        assert partial >= full - 1e-12
