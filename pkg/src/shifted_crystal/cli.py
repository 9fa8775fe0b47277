"""Command line interface.

Tableau files hold two lines: a shape ("5,3,1/" or "6,4,2/3,1") and a
filling with rows separated by "/" and primes as trailing apostrophes
("1 1 1 1 3' / 2 2 3' / 3").  Commands that output tableaux print the same
two-line format, so outputs feed back in as inputs.  Exit codes: 0 success,
1 a verification suite found violations, 2 usage errors.
"""

import argparse
import json
import sys

from .core import ShiftedTableau, SkewShape, StrictPartition, enumerate_tableaux
from .graph import build_graph, export_dot, export_json, lrs_count
from .involutions import eta, eta_interval, evacuate, reversal
from .jdt import rectify
from .operators import apply_program
from .verify import SUITES


def _read_tableau(path: str) -> ShiftedTableau:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) < 2:
        raise ValueError("tableau input needs a shape line and a filling line")
    return ShiftedTableau.parse(lines[0], lines[1])


def _print_tableau(T: ShiftedTableau):
    print(T.shape)
    print(T)


def _alphabet(args, T: ShiftedTableau) -> int:
    return args.n if args.n else max(T.max_value(), 1)


def _cmd_enumerate(args):
    shape = SkewShape.parse(args.shape)
    for T in enumerate_tableaux(shape, args.n):
        print(T)
    return 0


def _cmd_apply(args):
    T = _read_tableau(args.tableau)
    out = apply_program(T, args.ops, _alphabet(args, T))
    if out is None:
        print("none")
    else:
        _print_tableau(out)
    return 0


def _cmd_rectify(args):
    T = _read_tableau(args.tableau)
    _print_tableau(rectify(T)[0])
    return 0


def _cmd_evacuate(args):
    T = _read_tableau(args.tableau)
    _print_tableau(evacuate(T, _alphabet(args, T)))
    return 0


def _cmd_reversal(args):
    T = _read_tableau(args.tableau)
    _print_tableau(reversal(T, _alphabet(args, T)))
    return 0


def _cmd_eta(args):
    T = _read_tableau(args.tableau)
    n = _alphabet(args, T)
    if args.interval:
        p, q = (int(tok) for tok in args.interval.split(","))
        _print_tableau(eta_interval(T, p, q, n))
    else:
        _print_tableau(eta(T, n))
    return 0


def _cmd_graph(args):
    g = build_graph(SkewShape.parse(args.shape), args.n)
    text = export_dot(g) if args.format == "dot" else export_json(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args):
    suite = SUITES[args.suite]
    kwargs = {}
    if args.suite in ("cactus", "braid"):
        if args.shape:
            kwargs["shape"] = args.shape
        if args.n:
            kwargs["n"] = args.n
        if args.max_size:
            kwargs["max_vertices"] = args.max_size
    elif args.suite == "knuth":
        if args.max_size:
            kwargs["max_len"] = args.max_size
        kwargs["seed"] = args.seed
    elif args.suite == "symmetry":
        if args.shape:
            kwargs["bound"] = args.shape
    elif args.suite == "structure":
        if args.shape:
            kwargs["bound"] = args.shape
        if args.n:
            kwargs["n"] = args.n
    elif args.suite == "all":
        kwargs["seed"] = args.seed
    report = suite(**kwargs)
    print(report["summary"])
    violations = report.get("violations", [])
    if args.suite == "all":
        for sub in report["reports"]:
            violations = violations + sub.get("violations", [])
    if violations and args.suite != "all":
        print(json.dumps(violations[: args.max_report], indent=1))
    return 0 if report["ok"] else 1


def _cmd_lrs_count(args):
    print(lrs_count(
        StrictPartition.parse(args.lam),
        StrictPartition.parse(args.mu),
        StrictPartition.parse(args.nu),
    ))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shifted-crystal",
        description="Shifted tableau crystals: enumeration, operators, "
                    "involutions, graphs, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all tableaux of a shape")
    p.add_argument("--shape", required=True, help='skew shape, e.g. "3,1/1"')
    p.add_argument("--n", type=int, required=True, help="alphabet bound")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("apply", help="apply an operator program to a tableau")
    p.add_argument("--tableau", required=True, help="tableau file or - for stdin")
    p.add_argument("--ops", required=True,
                   help='comma separated program, e.g. "F1,E2\',S1"')
    p.add_argument("--n", type=int, help="alphabet bound (default: max value)")
    p.set_defaults(fn=_cmd_apply)

    for name, fn in (("rectify", _cmd_rectify), ("evacuate", _cmd_evacuate),
                     ("reversal", _cmd_reversal)):
        p = sub.add_parser(name, help=f"{name} a tableau")
        p.add_argument("--tableau", required=True)
        p.add_argument("--n", type=int)
        p.set_defaults(fn=fn)

    p = sub.add_parser("eta", help="crystal involution, optionally on an interval")
    p.add_argument("--tableau", required=True)
    p.add_argument("--interval", help='letter interval "p,q"')
    p.add_argument("--n", type=int)
    p.set_defaults(fn=_cmd_eta)

    p = sub.add_parser("graph", help="build and export a crystal graph")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--shape", help="graph shape or partition bound")
    p.add_argument("--n", type=int)
    p.add_argument("--max-size", type=int, dest="max_size",
                   help="size cap: word length for knuth, vertex cap for graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-report", type=int, default=10, dest="max_report",
                   help="maximum violations to print")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("lrs-count", help="shifted Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--nu", required=True)
    p.set_defaults(fn=_cmd_lrs_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
