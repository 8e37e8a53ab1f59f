"""Command line entry point: ``surcalc eval | repl | selftest``."""

import argparse
import sys

from .errors import ParseError, SurrealError
from .expr import evaluate, format_of, parse
from .render import render
from .series import DEFAULT_BUDGET

EXIT_OK, EXIT_EVAL, EXIT_PARSE = 0, 1, 2


def run_line(text, fmt="nf", depth=DEFAULT_BUDGET):
    """Evaluate one expression; return (exit code, output line)."""
    try:
        tree = parse(text)
    except ParseError as exc:
        return EXIT_PARSE, f"parse error: {exc}"
    try:
        value = evaluate(tree, depth)
        return EXIT_OK, render(value, format_of(tree) or fmt, depth)
    except (SurrealError, ValueError, RecursionError) as exc:
        return EXIT_EVAL, f"error: {exc}"


def cmd_eval(args):
    if args.expression == "-":
        code = EXIT_OK
        for line in sys.stdin:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            c, out = run_line(line, args.format, args.depth)
            print(out)
            code = max(code, c)
        return code
    code, out = run_line(args.expression, args.format, args.depth)
    print(out, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code


def cmd_repl(args):
    fmt, depth = "nf", args.depth
    while True:
        try:
            line = input("surcalc> ")
        except EOFError:
            print()
            return EXIT_OK
        line = line.strip()
        if not line:
            continue
        if line.startswith(":"):
            cmd, _, rest = line.partition(" ")
            if cmd == ":quit":
                return EXIT_OK
            if cmd in (":nf", ":sign", ":json"):
                fmt = cmd[1:]
                print(f"format {fmt}")
            elif cmd == ":depth":
                try:
                    depth = int(rest)
                    print(f"depth {depth}")
                except ValueError:
                    print("usage: :depth N")
            elif cmd == ":axioms":
                from .derivation import check_derivation_axioms
                print(check_derivation_axioms(seed=0, count=20, budget=depth).to_text())
            else:
                print(f"unknown command {cmd}")
            continue
        print(run_line(line, fmt, depth)[1])


def cmd_selftest(args):
    from .derivation import check_derivation_axioms
    checks = [
        ("w * (1/w)", "1"),
        ("exp(w)", "w^w"),
        ("exp(eps0)", "w^(w^(eps0 + 1))"),
        ("log(w)", "w^(w^-1)"),
        ("d(w^2)", "w*2"),
        ("d(log(w))", "w^-1"),
        ("{0 | 1}", "1/2"),
    ]
    ok = True
    for text, want in checks:
        code, got = run_line(text)
        good = code == EXIT_OK and got == want
        ok &= good
        print(f"{'ok  ' if good else 'FAIL'} {text} = {got}")
    report = check_derivation_axioms(seed=args.seed, count=args.count, budget=args.depth)
    print(report.to_json() if args.json else report.to_text())
    ok &= report.ok
    return EXIT_OK if ok else EXIT_EVAL


def cmd_minimize(args):
    """Search for the smallest pair where genetic and direct arithmetic disagree."""
    from .cuts import genetic_add, genetic_mul
    from .oracles import enumerate_dyadics
    nums = sorted(enumerate_dyadics(args.birthday), key=lambda d: (d.birthday, d))
    for a in nums:
        for b in nums:
            for name, gen, direct in (("add", genetic_add, a + b), ("mul", genetic_mul, a * b)):
                got = gen(a, b)
                if got != direct:
                    print(f"{name}({a}, {b}) = {got}, expected {direct}")
                    return EXIT_EVAL
    print(f"no counterexample up to birthday {args.birthday}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="surcalc", description="Exact calculator for surreal normal forms.")
    sub = p.add_subparsers(dest="command", required=True, metavar="{eval,repl,selftest}")
    e = sub.add_parser("eval", help="evaluate an expression ('-' reads one per line from stdin)")
    e.add_argument("expression")
    e.add_argument("--depth", type=int, default=DEFAULT_BUDGET)
    e.add_argument("--format", choices=("nf", "sign", "json"), default="nf")
    e.set_defaults(func=cmd_eval)
    r = sub.add_parser("repl", help="interactive session")
    r.add_argument("--depth", type=int, default=DEFAULT_BUDGET)
    r.set_defaults(func=cmd_repl)
    s = sub.add_parser("selftest", help="run the worked examples and the derivation laws")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--depth", type=int, default=10)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_selftest)
    m = sub.add_parser("minimize")  # not listed in the help text
    m.add_argument("--birthday", type=int, default=5)
    m.set_defaults(func=cmd_minimize)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
