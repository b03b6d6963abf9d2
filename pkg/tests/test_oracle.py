import random

import pytest

from bued.engine import EXHAUSTIVE, Engine
from bued.oracle import closure_for, enumerate_bracketings, naive_closure
from bued.lookup import scan, scan_nonunits
from bued.randprog import random_program
from bued.solver import Solver
from bued.syntax import read_term
from bued.terms import variant_key

from conftest import corpus_case


def engine_keys(program, goal, scheme=None):
    e = Engine(program, scheme=scheme, mode=EXHAUSTIVE)
    e.run(goal)
    return {variant_key(h) for h in e.unit_heads()}


def test_agrees_with_engine_on_corpus(corpus):
    _, program, goal = corpus
    closure = closure_for(goal, program)
    assert not closure.overflow
    assert closure.head_keys() == engine_keys(program, goal)


def test_empty_item_set():
    c = naive_closure([])
    assert c.heads == [] and not c.overflow


def test_free_recursion_overflows():
    program, goal = corpus_case("ambig")
    assert closure_for(goal, program, scheme="free", max_items=150).overflow


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)])
def test_bracketings(n, count):
    assert enumerate_bracketings(n) == count


def test_bracketings_rejects_zero():
    with pytest.raises(ValueError):
        enumerate_bracketings(0)


@pytest.mark.parametrize("seed", range(5))
def test_order_independent(seed):
    program, goal = corpus_case("cfg")
    items = scan(goal, program) + scan_nonunits(program)
    base = naive_closure(items, solver=Solver(program)).head_keys()
    random.Random(seed).shuffle(items)
    assert naive_closure(items, solver=Solver(program)).head_keys() == base


@pytest.mark.parametrize("scheme", ["free", "directional"])
@pytest.mark.parametrize("seed", range(25))
def test_random_programs(scheme, seed):
    rp = random_program(random.Random(seed), scheme)
    program, goal = rp.program(), read_term(rp.goal)
    closure = closure_for(goal, program)
    assert not closure.overflow
    assert closure.head_keys() == engine_keys(program, goal), rp.text
