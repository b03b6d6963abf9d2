"""Differential sweep: engine (exhaustive) against the naive closure on many
random programs.  Prints disagreeing programs and a summary line."""
import argparse
import random

from bued.engine import EXHAUSTIVE, Engine
from bued.oracle import closure_for
from bued.randprog import random_program
from bued.syntax import read_term
from bued.terms import variant_key


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--scheme", choices=["free", "directional"], action="append")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    bad = fired = 0
    for scheme in args.scheme or ["free", "directional"]:
        for _ in range(args.count):
            rp = random_program(rng, scheme)
            program, goal = rp.program(), read_term(rp.goal)
            e = Engine(program, mode=EXHAUSTIVE)
            e.run(goal)
            fired += any(it.parents for it in e.chart if it.is_unit)
            closure = closure_for(goal, program)
            if {variant_key(h) for h in e.unit_heads()} != closure.head_keys():
                bad += 1
                print(f"--- disagreement ({scheme}, goal {rp.goal})\n{rp.text}")
    print(f"{bad} disagreements; {fired} programs derived at least one unit")


if __name__ == "__main__":
    main()
