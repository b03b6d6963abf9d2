"""Order in which best-first search reports readings of a lexically
ambiguous sentence, with the number of agenda pops needed for each."""
import argparse

from bued.engine import BEST_FIRST, EXHAUSTIVE, Engine
from bued.program import load_program
from bued.syntax import format_term, read_term


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grammar", default="grammars/prefs.bued")
    ap.add_argument("--goal", default="s(phon:[time,flies,like,an,arrow] & tree:T)")
    args = ap.parse_args()
    program = load_program(args.grammar)
    goal = read_term(args.goal)

    e = Engine(program, mode=BEST_FIRST)
    for k, sol in enumerate(e.prove(goal), 1):
        print(f"{k}. pref={sol.preference:.4f} after {e.stats['steps']:>4} steps  "
              f"{format_term(sol.bindings.get('T', sol.head))}")
    full = Engine(program, mode=EXHAUSTIVE)
    full.run(goal)
    print(f"exhaustive run: {full.stats['steps']} steps, chart {len(full.chart)}")


if __name__ == "__main__":
    main()
