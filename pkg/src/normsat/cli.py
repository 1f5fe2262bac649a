"""Command-line entry point: ``normsat <verb> [options]``.

Formulas are read as DIMACS from a file argument or standard input. Results
go to standard output; certificates and traces go to the ``--cert`` and
``--trace`` paths when given. Exit status is 0 on success, 1 on domain
errors (bad input for the requested operation), 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from .aggressive import AggressiveComposite, eval_aggressive, eval_composition
from .cauchy import convergence_table, diagonalize, regular_cauchy
from .classifier import classify
from .equivalence import check_equivalent_composite, check_equivalent_ta1
from .formula import emit_dimacs, parse_dimacs
from .generate import random_normal_3cnf, random_regular_sequence
from .metric import distance_composite
from .normalizer import format_certificate, normalize
from .occurrence import format_splits, reduce_to_34
from .solvers import brute_force_sat, solve_2sat
from .truth import GeneralizedAssignment, eval_alg1, format_trace


class UsageError(Exception):
    pass


def parse_assignment(text: str, tail: str | None = None) -> GeneralizedAssignment:
    """``"1 -2 -3 4"`` with an optional embedded ``tail=...`` token."""
    lits = []
    for tok in text.split():
        if tok.startswith("tail="):
            if tail is None:
                tail = tok[5:]
            continue
        lits.append(int(tok))
    return GeneralizedAssignment.from_literals(lits, tail or "neg")


def _read_formula(path: str | None):
    if path in (None, "-"):
        return parse_dimacs(sys.stdin.read())
    with open(path) as fh:
        return parse_dimacs(fh.read())


def _write(path: str | None, text: str, out) -> None:
    if path in (None, "-"):
        out.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_side(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_normalize(args, out):
    f, records = normalize(_read_formula(args.input))
    _write(args.output, emit_dimacs(f), out)
    _write_side(args.cert, format_certificate(records))


def cmd_reduce34(args, out):
    f, records = reduce_to_34(_read_formula(args.input))
    _write(args.output, emit_dimacs(f), out)
    _write_side(args.cert, format_splits(records))


def cmd_classify(args, out):
    out.write(f"{classify(_read_formula(args.input))}\n")


def _assignment_args(args):
    return parse_assignment(args.assign, args.tail)


def cmd_eval(args, out):
    value, trace = eval_alg1(_assignment_args(args), _read_formula(args.input), args.n)
    out.write(_bool(value) + "\n")
    _write_side(args.trace, format_trace(trace))


def cmd_aggressive(args, out):
    value, trace = eval_aggressive(_assignment_args(args), _read_formula(args.input), args.n)
    out.write(_bool(value) + "\n")
    _write_side(args.trace, format_trace(trace))


def cmd_compose(args, out):
    if not args.part:
        raise UsageError("compose needs at least one --part")
    composite = AggressiveComposite(tuple(parse_assignment(p) for p in args.part))
    value, trace = eval_composition(composite, _read_formula(args.input), args.n)
    out.write(_bool(value) + "\n")
    _write_side(args.trace, format_trace(trace))


def cmd_distance(args, out):
    a = [parse_assignment(t, args.tail) for t in args.a or []]
    b = [parse_assignment(t, args.tail) for t in args.b or []]
    if not a and not b:
        raise UsageError("distance needs --a and/or --b")
    out.write(f"{distance_composite(a, b)}\n")


def cmd_equiv(args, out):
    if len(args.a) != len(args.b):
        raise UsageError("equiv needs the same number of --a and --b parts")
    a = [parse_assignment(t, args.tail) for t in args.a]
    b = [parse_assignment(t, args.tail) for t in args.b]
    if len(a) > 1:
        same = check_equivalent_composite(AggressiveComposite(tuple(a)), AggressiveComposite(tuple(b)))
        out.write(_bool(same) + "\n")
        return
    if args.inputs:
        samples = [_read_formula(p) for p in args.inputs]
    else:
        rng = random.Random(args.seed)
        samples = [random_normal_3cnf(rng, rng.randint(3, 8), rng.randint(1, 12)) for _ in range(args.samples)]
    pi, ok = check_equivalent_ta1(a[0], b[0], samples, args.n)
    out.write(f"{pi}\n{_bool(ok)}\n")


def cmd_solve2sat(args, out):
    out.write(f"{solve_2sat(_read_formula(args.input))}\n")


def cmd_brute(args, out):
    out.write(f"{brute_force_sat(_read_formula(args.input))}\n")


def cmd_cauchy(args, out):
    a0 = parse_assignment(args.a0) if args.a0 else GeneralizedAssignment()
    positive = set(args.positive or [])
    seq = regular_cauchy(a0, lambda i: i in positive)
    out.write(convergence_table(seq, args.upto))


def cmd_diagonal(args, out):
    rng = random.Random(args.seed)
    listed = [random_regular_sequence(rng) for _ in range(args.count)]
    diag = diagonalize(listed)
    for k, seq in enumerate(listed, 1):
        ours, theirs = diag.element(k), seq.element(k)
        same = check_equivalent_composite(ours, theirs)
        out.write(f"{k}\t{diag.term(k)}\t{seq.term(k)}\t{'equivalent' if same else 'distinct'}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normsat", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for generated corpora")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def with_input(p):
        p.add_argument("input", nargs="?", help="DIMACS file (default: stdin)")
        return p

    p = with_input(sub.add_parser("normalize", help="rewrite to normal 3-CNF"))
    p.add_argument("-o", "--output")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_normalize)

    p = with_input(sub.add_parser("reduce34", help="limit every variable to 4 occurrences"))
    p.add_argument("-o", "--output")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_reduce34)

    p = with_input(sub.add_parser("classify", help="occurrence class of a normal 3-CNF"))
    p.set_defaults(func=cmd_classify)

    for verb, func in (("eval", cmd_eval), ("aggressive", cmd_aggressive)):
        p = with_input(sub.add_parser(verb, help=f"{verb} under a generalized assignment"))
        p.add_argument("--assign", required=True, help='signed prefix, e.g. "1 -2 -3 4"')
        p.add_argument("--tail", default=None, help="neg, pos, alt or word:<+->")
        p.add_argument("--n", type=int, default=None, help="loop bound (default: declared vars)")
        p.add_argument("--trace")
        p.set_defaults(func=func)

    p = with_input(sub.add_parser("compose", help="evaluate (a1)(a2)...; rightmost first"))
    p.add_argument("--part", action="append", help='e.g. "1 -2 tail=pos"; repeatable')
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--trace")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("distance", help="exact distance between assignments or composites")
    p.add_argument("--a", action="append", help="part of the first composite; repeatable")
    p.add_argument("--b", action="append", help="part of the second composite; repeatable")
    p.add_argument("--tail", default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("equiv", help="derive the flip map and compare traces")
    p.add_argument("--a", action="append", required=True)
    p.add_argument("--b", action="append", required=True)
    p.add_argument("--tail", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("inputs", nargs="*", help="sample DIMACS files (default: generated)")
    p.set_defaults(func=cmd_equiv)

    p = with_input(sub.add_parser("solve2sat", help="implication-graph 2SAT decision"))
    p.set_defaults(func=cmd_solve2sat)

    p = with_input(sub.add_parser("brute", help="exhaustive satisfiability check"))
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("cauchy", help="convergence table of a regular sequence")
    p.add_argument("--upto", type=int, default=30)
    p.add_argument("--a0", default=None)
    p.add_argument("--positive", type=int, action="append", help="index whose sign is positive")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("diagonal", help="diagonalize seeded random sequences")
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_diagonal)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"normsat: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"normsat: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"normsat: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
