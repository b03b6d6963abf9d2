"""Random small programs for differential testing against the oracle.

Rules are range restricted and never wrap a head variable in a function
symbol, so every closure is finite.  Base cases come from ``fact/1``
(indexed free) or from ``lex/2`` over an input word list (directed spans).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .program import Program, parse_program

CONSTANTS = ("a", "b", "c")
FUNCTORS = ("f", "g")
PREDICATES = (("p", 1), ("q", 2), ("r", 1), ("s", 0), ("t", 2))
WORDS = ("w1", "w2", "w3")


@dataclass
class RandConfig:
    max_clauses: int = 8
    max_arity: int = 2
    max_depth: int = 2
    max_body: int = 2
    inline_rate: float = 0.2
    input_length: int = 4


@dataclass
class RandProgram:
    text: str
    goal: str
    scheme: str

    def program(self) -> Program:
        return parse_program(self.text, name="<random>")


def _ground(rng: random.Random, depth: int) -> str:
    if depth <= 1 or rng.random() < 0.7:
        return rng.choice(CONSTANTS)
    return f"{rng.choice(FUNCTORS)}({_ground(rng, depth - 1)})"


def _pattern(rng: random.Random, depth: int, vars_: list) -> str:
    """Body argument: a variable, a constant or f(...) around one of them."""
    roll = rng.random()
    if depth > 1 and roll < 0.15:
        return f"{rng.choice(FUNCTORS)}({_pattern(rng, depth - 1, vars_)})"
    if roll < 0.85:
        if vars_ and rng.random() < 0.5:
            return rng.choice(vars_)
        v = f"X{len(vars_)}"
        vars_.append(v)
        return v
    return rng.choice(CONSTANTS)


def _atom(name: str, args: list) -> str:
    return f"{name}({','.join(args)})" if args else name


def _preds(cfg: RandConfig):
    return [p for p in PREDICATES if p[1] <= cfg.max_arity]


def _fact(rng, cfg, pred) -> str:
    name, n = pred
    return _atom(name, [_ground(rng, cfg.max_depth) for _ in range(n)])


def _rule(rng, cfg, body_preds) -> tuple:
    """A rule whose body draws on predicates that already have base cases
    or rules, so it has a chance to fire."""
    vars_: list = []
    body = []
    for _ in range(rng.randint(1, cfg.max_body)):
        name, n = rng.choice(body_preds)
        body.append(_atom(name, [_pattern(rng, cfg.max_depth, vars_) for _ in range(n)]))
    if vars_ and rng.random() < cfg.inline_rate:
        v = rng.choice(vars_)
        body.append("{" + f"{v} \\= {rng.choice(CONSTANTS)}" + "}")
    head = rng.choice(_preds(cfg))
    name, n = head
    head_args = [rng.choice(vars_) if vars_ and rng.random() < 0.8 else rng.choice(CONSTANTS)
                 for _ in range(n)]
    return head, f"{_atom(name, head_args)} <- {', '.join(body)}."


def random_program(rng: random.Random, scheme: str = "free",
                   cfg: RandConfig | None = None) -> RandProgram:
    cfg = cfg or RandConfig()
    n = rng.randint(2, cfg.max_clauses)
    n_facts = rng.randint(1, n - 1)
    fact_preds = [rng.choice(_preds(cfg)) for _ in range(n_facts)]
    facts = [_fact(rng, cfg, p) for p in fact_preds]
    known = list(dict.fromkeys(fact_preds))
    rules = []
    for _ in range(n - n_facts):
        head, text = _rule(rng, cfg, known)
        rules.append(text)
        if head not in known:
            known.append(head)
    lines = [f"#scheme {scheme}"] + rules
    if scheme == "free":
        lines.append("lookup(_, F) <- fact(F).")
        lines += [f"fact({f})." for f in facts]
        goal = "go"
    else:
        lines.append("lookup(go(Words), item(F, B-E)) <- nth_member(W, B, E, Words), lex(W, F).")
        lex_words = [rng.choice(WORDS) for _ in facts]
        lines += [f"lex({w}, {f})." for w, f in zip(lex_words, facts)]
        words = [rng.choice(lex_words) for _ in range(rng.randint(1, cfg.input_length))]
        goal = f"go([{','.join(words)}])"
    return RandProgram("\n".join(lines) + "\n", goal, scheme)
