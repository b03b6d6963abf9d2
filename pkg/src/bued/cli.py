"""Command-line front end.

    bued prove -g GRAMMAR --goal TERM [options]
    bued check -g GRAMMAR --goal TERM [options]
    bued repl  -g GRAMMAR --goal TEMPLATE [--input-var Input]

Exit codes: prove 0 (solutions found), 1 (none), 2 (error);
check 0 (engine and oracle agree), 1 (they differ), 2 (error), 3 (overflow).
"""
from __future__ import annotations

import argparse
import sys

from .engine import BEST_FIRST, EXHAUSTIVE, Engine, Options
from .errors import BudgetExceeded, BuedError
from .indexing import SCHEMES
from .oracle import closure_for
from .program import load_program, validate
from .syntax import format_term, read_term
from .terms import Atom, Num, Var, apply, make_list, term_vars, variant_key


def _common(p: argparse.ArgumentParser):
    p.add_argument("-g", "--grammar", required=True, help="grammar file (.bued)")
    p.add_argument("--goal", required=True, help="goal term")
    p.add_argument("--scheme", choices=sorted(SCHEMES), help="override the grammar's #scheme")
    p.add_argument("--max-items", type=int, default=100_000)
    p.add_argument("--max-steps", type=int, default=1_000_000)
    p.add_argument("--depth-bound", type=int, default=10_000,
                   help="resolution steps allowed per inline query")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bued", description="Bottom-up Earley deduction")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="prove a goal and print its solutions")
    _common(p)
    p.add_argument("--mode", choices=[BEST_FIRST, EXHAUSTIVE], default=BEST_FIRST)
    p.add_argument("--max-solutions", type=int)
    p.add_argument("--trace", metavar="FILE", help="write JSON-lines trace to FILE")
    p.add_argument("--proofs", action="store_true", help="print a proof tree per solution")
    p.add_argument("--subsume", action="store_true",
                   help="drop chart items subsumed by an existing item")
    p.add_argument("--full-span", action="store_true",
                   help="only accept solutions covering the whole scanned input")

    c = sub.add_parser("check", help="compare the engine with the naive closure")
    _common(c)
    c.add_argument("--oracle-max-items", type=int, default=2000)

    r = sub.add_parser("repl", help="feed input tokens one line at a time")
    r.add_argument("-g", "--grammar", required=True)
    r.add_argument("--goal", required=True,
                   help="goal template; the input variable is replaced by the token list")
    r.add_argument("--input-var", default="Input")
    r.add_argument("--scheme", choices=sorted(SCHEMES))
    r.add_argument("--mode", choices=[BEST_FIRST, EXHAUSTIVE], default=BEST_FIRST)
    r.add_argument("--full-span", action="store_true")
    return parser


def _load(args, err):
    program = load_program(args.grammar)
    diags = validate(program, proving=True)
    for d in diags:
        print(d, file=err)
    if any(d.level == "error" for d in diags):
        raise BuedError("grammar has errors")
    return program


def cmd_prove(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    trace = None
    try:
        program = _load(args, err)
        goal = read_term(args.goal)
        if args.trace:
            trace = open(args.trace, "w", encoding="utf-8")
        opts = Options(scheme=args.scheme, mode=args.mode, max_solutions=args.max_solutions,
                       max_items=args.max_items, max_steps=args.max_steps,
                       depth_bound=args.depth_bound, subsume=args.subsume,
                       full_span=args.full_span, trace=trace)
        engine = Engine(program, opts)
        n = 0
        for sol in engine.prove(goal):
            n += 1
            print(f"solution {n}: {sol}", file=out)
            if args.proofs:
                print(engine.extract_proof(sol.root).format(indent=1), file=out)
        for d in engine.diagnostics:
            print(f"warning: {d}", file=err)
        print(f"% {n} solution(s), chart {len(engine.chart)} items, "
              f"{engine.stats['steps']} steps", file=err)
        return 0 if n else 1
    except BudgetExceeded as e:
        print(f"bued: {e} {e.stats}", file=err)
        return 2
    except (BuedError, OSError) as e:
        print(f"bued: {e}", file=err)
        return 2
    finally:
        if trace is not None:
            trace.close()


def cmd_check(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        program = _load(args, err)
        goal = read_term(args.goal)
        closure = closure_for(goal, program, args.scheme, args.oracle_max_items)
        if closure.overflow:
            print(f"oracle overflow: more than {args.oracle_max_items} items", file=out)
            return 3
        engine = Engine(program, scheme=args.scheme, mode=EXHAUSTIVE,
                        max_items=args.max_items, max_steps=args.max_steps,
                        depth_bound=args.depth_bound)
        try:
            engine.run(goal)
        except BudgetExceeded as e:
            print(f"engine overflow: {e}", file=out)
            return 3
    except (BuedError, OSError) as e:
        print(f"bued: {e}", file=err)
        return 2

    engine_heads = {variant_key(h): h for h in engine.unit_heads()}
    oracle_heads = {variant_key(h): h for h in closure.heads}
    only_engine = [engine_heads[k] for k in engine_heads if k not in oracle_heads]
    only_oracle = [oracle_heads[k] for k in oracle_heads if k not in engine_heads]
    for h in only_engine:
        print(f"+ {format_term(h)}", file=out)
    for h in only_oracle:
        print(f"- {format_term(h)}", file=out)
    print(f"% engine {len(engine_heads)} unit heads, oracle {len(oracle_heads)}", file=out)
    return 1 if only_engine or only_oracle else 0


def _goal_for(template, input_var: Var, tokens):
    return apply({input_var.id: make_list(tokens)}, template)


def cmd_repl(args, inp=None, out=None, err=None) -> int:
    inp, out, err = inp or sys.stdin, out or sys.stdout, err or sys.stderr
    try:
        program = _load(args, err)
        template = read_term(args.goal)
    except (BuedError, OSError) as e:
        print(f"bued: {e}", file=err)
        return 2
    input_var = next((v for v in term_vars(template) if v.name == args.input_var), None)
    if input_var is None:
        print(f"bued: goal has no variable {args.input_var}", file=err)
        return 2
    engine = Engine(program, scheme=args.scheme, mode=args.mode, full_span=args.full_span)
    tokens: list = []
    for line in inp:
        line = line.strip()
        if not line:
            continue
        if line.startswith(":"):
            if line == ":quit":
                break
            if line == ":chart":
                for item in engine.chart:
                    print(f"#{item.id} {item}", file=out)
                continue
            print(f"unknown command {line}", file=out)
            continue
        words = []
        try:
            for w in line.split():
                t = read_term(w)
                if not isinstance(t, (Atom, Num)):
                    raise BuedError(f"not a word: {w}")
                words.append(t)
        except BuedError as e:
            print(f"error: {e}", file=out)
            continue
        before = len(engine.chart)
        scanned = engine.stats["scan"]
        tokens.extend(words)
        try:
            sols = engine.extend_input(_goal_for(template, input_var, tokens))
        except BudgetExceeded as e:
            print(f"error: {e}", file=out)
            return 2
        if engine.stats["scan"] == scanned:
            print(f"warning: no lexical items for {line}", file=out)
        print(f"items +{len(engine.chart) - before} chart={len(engine.chart)}", file=out)
        for sol in sols:
            print(f"solution: {sol}", file=out)
        out.flush()
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "prove":
        return cmd_prove(args)
    if args.command == "check":
        return cmd_check(args)
    return cmd_repl(args)


if __name__ == "__main__":
    sys.exit(main())
