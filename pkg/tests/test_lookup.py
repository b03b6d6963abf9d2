import pytest

from bued.errors import InstantiationError, ScanError
from bued.indexing import FREE, DirectedSpan, SpanSet, UndirectedSpan, WordSet
from bued.lookup import builtin, index_from_literal, scan, scan_nonunits
from bued.program import parse_program
from bued.syntax import read_term, show
from bued.terms import subsumes

from conftest import corpus_case

POSITIONAL = """
lookup(sign(phon:PhonList), item(lexical_sign(phon:[Word] & synsem:S), Begin-End)) <-
    nth_member(Word, Begin, End, PhonList),
    lexicon(Word, S).
lexicon(the, head:det).
lexicon(dog, head:noun).
"""


def test_positional_lookup():
    items = scan(read_term("sign(phon:[the,dog])"), parse_program(POSITIONAL))
    assert [i.index for i in items] == [DirectedSpan(0, 1), DirectedSpan(1, 2)]
    assert [show(i.clause.head) for i in items] == [
        "lexical_sign(phon:[the] & synsem:head:det)",
        "lexical_sign(phon:[dog] & synsem:head:noun)",
    ]


def test_empty_input_scans_nothing():
    assert scan(read_term("sign(phon:[])"), parse_program(POSITIONAL)) == []


def test_scan_is_deterministic():
    p = parse_program(POSITIONAL)
    g = read_term("sign(phon:[dog,the,dog])")
    a, b = scan(g, p), scan(g, p)
    assert [i.signature() for i in a] == [i.signature() for i in b]


def test_positional_spans_match_naive_scan():
    p = parse_program(POSITIONAL)
    words = ["the", "dog", "cat", "dog", "the"]
    items = scan(read_term(f"sign(phon:[{','.join(words)}])"), p)
    expected = [(i, i + 1) for i, w in enumerate(words) if w in ("the", "dog")]
    assert sorted((i.index.start, i.index.end) for i in items) == expected


def test_difference_list_lookup():
    program, _ = corpus_case("hpsg_dlist")
    items = scan(read_term("sign(phon:[kim,sleeps]-[])"), program)
    heads = sorted(show(i.clause.head) for i in items)
    assert any("phon:[kim,sleeps]-[sleeps]" in h for h in heads)
    assert any("phon:[sleeps]-[]" in h for h in heads)
    assert all(i.index == FREE for i in items)


def test_difference_list_suffix_is_rest_of_input():
    p = parse_program("""
    lookup(sign(phon:P-[]), lexical_sign(phon:[W|Suf]-Suf & cat:C)) <-
        append(_, [W|Suf], P), lex(W, C).
    lex(the, det).
    lex(dog, n).
    """)
    items = scan(read_term("sign(phon:[the,dog]-[])"), p)
    assert sorted(show(i.clause.head) for i in items) == [
        "lexical_sign(cat:det & phon:[the,dog]-[dog])",
        "lexical_sign(cat:n & phon:[dog]-[])",
    ]


def test_scanned_items_are_instances_of_lexicon():
    program, goal = corpus_case("cfg")
    lex_heads = [c.head.args[1] for c in program.clauses if c.head.functor == "lex"]
    for item in scan(goal, program):
        assert any(subsumes(h, item.clause.head) for h in lex_heads)


def test_duplicate_entries_collapse_to_best():
    p = parse_program("""
    lookup(g(Ws), item(w(W), B-E)) <- nth_member(W, B, E, Ws), lex(W).
    #pref 0.3
    lex(a).
    #pref 0.8
    lex(a).
    """)
    items = scan(read_term("g([a])"), p)
    assert len(items) == 1
    assert items[0].preference == pytest.approx(0.8)


def test_scan_nonunits():
    program, _ = corpus_case("hpsg")
    items = scan_nonunits(program)
    assert all(i.index == FREE and not i.is_unit for i in items)
    preds = {i.clause.head.functor for i in items}
    assert {"sign", "phrasal_sign", "principles"} <= preds
    assert "lookup" not in preds
    assert scan_nonunits(parse_program("a. b(c).")) == []


@pytest.mark.parametrize("literal,scheme,expected", [
    ("0-2", "directional", DirectedSpan(0, 2)),
    ("0-2", "nondirectional", UndirectedSpan(0, 2)),
    ("0-2", "nonadjacent", SpanSet(frozenset({(0, 2)}))),
    ("0-2", "nonreuse", WordSet(frozenset({0, 1}))),
    ("0-2", "free", FREE),
    ("free", "directional", FREE),
    ("spans([span(0,1),span(2,3)])", "nonadjacent", SpanSet(frozenset({(0, 1), (2, 3)}))),
    ("words([1,4])", "nonreuse", WordSet(frozenset({1, 4}))),
])
def test_index_literals(literal, scheme, expected):
    assert index_from_literal(read_term(literal), scheme) == expected


@pytest.mark.parametrize("literal,scheme", [
    ("span(0,1)", "nonreuse"), ("a-b", "directional"), ("spans(x)", "nonadjacent"),
    ("2-1", "directional"), ("blob", "directional"),
])
def test_bad_index_literals(literal, scheme):
    with pytest.raises(ScanError):
        index_from_literal(read_term(literal), scheme)


def test_runaway_lookup_is_a_scan_error():
    p = parse_program("lookup(G, x) <- loop.\nloop <- loop.")
    with pytest.raises(ScanError, match="resolution steps"):
        scan(read_term("g"), p)


def all_solutions(text):
    g = read_term(text)
    return [show(g, b) for b in builtin(g)]


def test_nth_member_builtin():
    assert all_solutions("nth_member(W,B,E,[the,dog])") == [
        "nth_member(the,0,1,[the,dog])", "nth_member(dog,1,2,[the,dog])"]


def test_append_and_member():
    assert len(all_solutions("append(X,Y,[a,b])")) == 3
    assert all_solutions("member(a,[])") == []
    assert all_solutions("X is 2 + 3 * 4") == ["14 is 2 + 3*4"]


def test_is_needs_bound_right_side():
    with pytest.raises(InstantiationError):
        list(builtin(read_term("X is Y + 1")))
