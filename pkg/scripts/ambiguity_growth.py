"""Chart size, steps and parse count for x -> x x | a as the input grows,
under directed spans and (with a cap) without indexing."""
import argparse
import time
from dataclasses import dataclass

from bued.engine import EXHAUSTIVE, Engine, chart_bound
from bued.errors import BudgetExceeded
from bued.oracle import enumerate_bracketings
from bued.program import load_program
from bued.syntax import read_term


@dataclass
class Config:
    grammar: str = "grammars/ambig.bued"
    max_n: int = 8
    free_cap: int = 200


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grammar", default=Config.grammar)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--free-cap", type=int, default=Config.free_cap)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    program = load_program(cfg.grammar)
    print(f"{'n':>3} {'parses':>7} {'catalan':>8} {'chart':>6} {'bound':>6} {'steps':>7} "
          f"{'secs':>6}  free-scheme")
    for n in range(1, cfg.max_n + 1):
        goal = read_term(f"x(phon:[{','.join(['a'] * n)}] & tree:T)")
        e = Engine(program, mode=EXHAUSTIVE)
        t0 = time.perf_counter()
        sols = e.run(goal)
        dt = time.perf_counter() - t0
        try:
            Engine(program, scheme="free", mode=EXHAUSTIVE, max_items=cfg.free_cap).run(goal)
            free = "terminated"
        except BudgetExceeded:
            free = f"> {cfg.free_cap} items"
        print(f"{n:>3} {len(sols):>7} {enumerate_bracketings(n):>8} {len(e.chart):>6} "
              f"{chart_bound(program, n):>6} {e.stats['steps']:>7} {dt:>6.3f}  {free}")


if __name__ == "__main__":
    main()
