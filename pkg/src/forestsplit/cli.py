"""Command-line interface: ``forestsplit {solve,verify,oracle,gen,experiment,example}``."""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import ValidationError
from .generators import MODELS, GenConfig, gen_pair, tightness_example
from .io import check_solution, emit_dot, format_instance, format_solution, parse_instance, solution_document
from .oracle import DEFAULT_LIMIT, experiment, oracle_min_k, rows_to_csv
from .solver import solve

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_solve(args):
    pair = parse_instance(_read(args.instance))
    partition, report = solve(pair, args.root_strategy, args.seed)
    doc = solution_document(partition, report, args.root_strategy, args.seed)
    _write(args.out, format_solution(doc))
    if args.dot:
        _write(args.dot, emit_dot(pair, partition))
    return EXIT_OK


def _cmd_verify(args):
    pair = parse_instance(_read(args.instance))
    report, consistent = check_solution(pair, _read(args.assignment))
    sys.stdout.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
    if not consistent:
        print("error: stated report does not match the recomputed one", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def _cmd_oracle(args):
    pair = parse_instance(_read(args.instance))
    res = oracle_min_k(pair, args.limit)
    print(f"k_min={res.k_min}")
    print(f"witness={json.dumps(res.witness.tolist(), separators=(',', ':'))}")
    print(f"enumerated={res.enumerated}")
    return EXIT_OK


def _cmd_gen(args):
    cfg = GenConfig(args.n, args.model, args.seed, args.components)
    _write(args.out, format_instance(gen_pair(cfg)))
    return EXIT_OK


def _cmd_experiment(args):
    cfg = GenConfig(args.n, args.model, args.seed, args.components)
    rows, summary = experiment(args.count, cfg, with_oracle=args.oracle)
    _write(args.csv, rows_to_csv(rows))
    for line in summary.lines():
        print(line)
    return EXIT_OK


def _cmd_example(args):
    sys.stdout.write(format_instance(tightness_example()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="forestsplit",
        description="Simultaneous locally-balanced 2-partitions of two forests.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="partition an instance with imbalance <= 2")
    s.add_argument("instance", help="instance JSON file ('-' for stdin)")
    s.add_argument("--out", help="solution file (default: stdout)")
    s.add_argument("--dot", help="also write a DOT rendering here")
    s.add_argument("--root-strategy", choices=("min-id", "seeded"), default="min-id")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=_cmd_solve)

    s = sub.add_parser("verify", help="recompute the imbalance report of an assignment")
    s.add_argument("instance")
    s.add_argument("--assignment", required=True, help="solution document or bare 0/1 array")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("oracle", help="exact minimum imbalance by exhaustive search")
    s.add_argument("instance")
    s.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("gen", help="generate a random instance")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--model", choices=MODELS, default="prufer-tree")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--components", type=int, default=None)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("experiment", help="solve a batch of random instances, write CSV")
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--model", choices=MODELS, default="prufer-tree")
    s.add_argument("--components", type=int, default=None)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--csv", required=True)
    s.set_defaults(func=_cmd_experiment)

    s = sub.add_parser("example", help="print the 5-vertex tightness instance")
    s.set_defaults(func=_cmd_example)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "root_strategy", None) == "seeded" and args.seed is None:
        print("error: --root-strategy seeded requires --seed", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main():
    sys.exit(run_cli())
