from hypothesis import given, settings, strategies as st

from bued.syntax import read_term, show
from bued.terms import (Atom, Avm, Struct, Var, VarSupply, apply, fresh_var, is_variant,
                        rename_apart, subsumes, term_vars, unify, variant_key)
from bued.program import parse_program


def t(text):
    return read_term(text)


def test_textbook_mgu():
    a, b = t("f(X,a)"), t("f(b,Y)")
    s = unify(a, b)
    assert s is not None
    assert apply(s, a) == apply(s, b) == t("f(b,a)")


def test_open_record_unification_keeps_both_features():
    a, b = t("phon:[w]"), t("phon:[w] & synsem:S")
    s = unify(a, b)
    merged = apply(s, a)
    assert isinstance(merged, Avm)
    assert {k for k, _ in merged.features} == {"phon", "synsem"}
    assert is_variant(merged, apply(s, b))


def test_occurs_check():
    x = fresh_var("X")
    assert unify(x, Struct("f", (x,))) is None


def test_record_clash_fails():
    assert unify(t("cat:np"), t("cat:vp & num:sg")) is None


def test_apply_examples():
    x, y = fresh_var("X"), fresh_var("Y")
    assert apply({x.id: Atom("a")}, Struct("f", (x, y))) == Struct("f", (Atom("a"), y))
    term = Struct("f", (x, y))
    assert apply({}, term) == term
    s = {x.id: Struct("g", (y,)), y.id: Atom("b")}
    assert apply(s, x) == t("g(b)")


def test_rename_apart_gives_disjoint_variants():
    c = parse_program("p(X) <- q(X).").clauses[0]
    c1, c2 = rename_apart(c), rename_apart(c)
    v1 = {v.id for v in _vars(c1.as_term())}
    v2 = {v.id for v in _vars(c2.as_term())}
    assert v1.isdisjoint(v2)
    assert is_variant(c1.as_term(), c2.as_term())
    ground = parse_program("p(a) <- q(b).").clauses[0]
    assert rename_apart(ground).as_term() == ground.as_term()


def _vars(term):
    return term_vars(term)


def test_subsumes_examples():
    assert subsumes(t("f(X,Y)"), t("f(a,b)"))
    assert not subsumes(t("f(X,X)"), t("f(a,b)"))
    assert not subsumes(t("f(a)"), t("f(X)"))


def test_variant_key_ignores_names():
    assert variant_key(t("f(X,Y,X)")) == variant_key(t("f(A,B,A)"))
    assert variant_key(t("f(X,Y)")) != variant_key(t("f(X,X)"))


# -- properties --------------------------------------------------------------

NAMES = ["X", "Y", "Z"]


def terms(max_leaves=8):
    leaf = st.one_of(st.sampled_from(["a", "b"]), st.sampled_from(NAMES))
    return st.recursive(
        leaf,
        lambda kids: st.one_of(
            st.builds(lambda x: f"f({x})", kids),
            st.builds(lambda x, y: f"g({x},{y})", kids, kids)),
        max_leaves=max_leaves)


def pair(a, b):
    # read both sides together so shared variable names denote the same variable
    p = read_term(f"pair({a},{b})")
    return p.args


@settings(max_examples=200, deadline=None)
@given(terms(), terms())
def test_unifier_makes_sides_equal(a, b):
    x, y = pair(a, b)
    s = unify(x, y)
    if s is not None:
        assert apply(s, x) == apply(s, y)


@settings(max_examples=200, deadline=None)
@given(terms(), terms(), st.dictionaries(st.sampled_from(NAMES), terms(4), max_size=3))
def test_mgu_is_most_general(a, b, theta_text):
    x, y = pair(a, b)
    s = unify(x, y)
    names = {v.name: v for v in _vars(Struct("k", (x, y)))}
    theta = {names[k].id: read_term(v) for k, v in theta_text.items() if k in names}
    if apply(theta, x) == apply(theta, y):
        assert s is not None
        assert subsumes(apply(s, x), apply(theta, x))


@settings(max_examples=150, deadline=None)
@given(terms(), terms())
def test_unify_is_symmetric(a, b):
    x, y = pair(a, b)
    s1, s2 = unify(x, y), unify(y, x)
    assert (s1 is None) == (s2 is None)
    if s1 is not None:
        assert is_variant(apply(s1, x), apply(s2, x))


features = st.dictionaries(st.sampled_from(["f", "g", "h"]),
                           st.one_of(st.sampled_from(["a", "b", "V", "W"]),
                                     st.builds(lambda k, v: f"({k}:{v})",
                                               st.sampled_from(["f", "g"]),
                                               st.sampled_from(["a", "b", "V"]))),
                           min_size=1, max_size=3)


def record(d):
    return " & ".join(f"{k}:{v}" for k, v in d.items())


@settings(max_examples=150, deadline=None)
@given(features, features)
def test_avm_unification_commutes(d1, d2):
    p = read_term(f"pair({record(d1)}, {record(d2)})")
    x, y = p.args
    s1, s2 = unify(x, y), unify(y, x)
    assert (s1 is None) == (s2 is None)
    if s1 is not None:
        assert is_variant(apply(s1, x), apply(s2, y))


@settings(max_examples=150, deadline=None)
@given(features, features, features)
def test_avm_unification_associates(d1, d2, d3):
    p = read_term(f"t({record(d1)}, {record(d2)}, {record(d3)})")
    x, y, z = p.args
    s = unify(x, y)
    left = None if s is None else unify(apply(s, x), z, s)
    s = unify(y, z)
    right = None if s is None else unify(x, apply(s, y), s)
    assert (left is None) == (right is None)
    if left is not None:
        assert is_variant(apply(left, x), apply(right, x))


def test_var_supply_is_monotone():
    sup = VarSupply()
    assert sup.fresh().id != sup.fresh().id
    assert isinstance(sup.fresh("Q"), Var)


def test_show_round_trip():
    term = t("f(X, [a,b|T], p:[1] & q:Y)")
    assert is_variant(read_term(show(term)), term)
