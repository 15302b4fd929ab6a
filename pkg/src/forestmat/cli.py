"""Command-line front end.

Exit codes: 0 success, 1 validation or usage error, 2 resource limit,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closed_forms as cf
from .dissemination import estimate_source_probabilities
from .errors import EnumerationLimitError, ValidationError
from .exact import forest_matrix_exact, proximity_matrix
from .graph import Graph, make_cycle, make_path, make_tcaterpillar
from .random_walk import WalkConfig, simulate_walks
from .verify import run_suites

DEFAULT_SEED = 20080101

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RESOURCE = 2
EXIT_VERIFY = 3

FAMILIES = {"path": make_path, "cycle": make_cycle, "tcat": make_tcaterpillar}


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forestmat",
                     description="Spanning rooted forests and the doubly stochastic graph matrix.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(p):
        p.add_argument("--family", choices=[*FAMILIES, "file"], required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--input", help="graph JSON file (with --family file)")

    def output_args(p, formats=("json", "csv")):
        p.add_argument("--output", help="write here instead of standard output")
        p.add_argument("--format", choices=formats, default="json")

    p = sub.add_parser("gen", help="write a standard graph as JSON")
    graph_args(p)
    output_args(p, ("json",))

    p = sub.add_parser("matrix", help="exact f, (f_ij) and F")
    graph_args(p)
    output_args(p)

    p = sub.add_parser("closed-form", help="Fibonacci/Lucas closed forms")
    p.add_argument("--family", choices=list(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    output_args(p)

    p = sub.add_parser("classify", help="introvert / extrovert / boundary per vertex")
    graph_args(p)
    output_args(p, ("text", "json"))
    p.set_defaults(format="text")

    p = sub.add_parser("walk", help="simulate geometric-stop random walks")
    graph_args(p)
    output_args(p, ("json",))
    p.add_argument("--walks", type=int, default=100_000, help="walks per start vertex")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("disseminate", help="simulate idea sources over uniform rooted forests")
    graph_args(p)
    output_args(p, ("json",))
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--scope", choices=["all", "fast"], default="fast")
    p.add_argument("--input", help="fixture JSON {graph, f, counts} to check as well")
    p.add_argument("--output")
    return parser


def load_graph(args) -> Graph:
    if args.family == "file":
        if not args.input:
            raise UsageError("--family file needs --input")
        if args.n is not None:
            raise UsageError("--n cannot be combined with --family file")
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
        try:
            return Graph.from_json(text)
        except ValidationError as exc:
            raise type(exc)(f"{args.input}: {exc}") from None
    if args.input:
        raise UsageError(f"--input cannot be combined with --family {args.family}")
    if args.n is None:
        raise UsageError(f"--family {args.family} needs --n")
    return FAMILIES[args.family](args.n)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj) + "\n"


def _check_seed(seed: int) -> None:
    if not 0 <= seed < 2 ** 64:
        raise ValidationError(f"--seed must be an unsigned 64-bit integer, got {seed}")


def cmd_gen(args) -> str:
    return _json(load_graph(args).to_json())


def cmd_matrix(args) -> str:
    fc = forest_matrix_exact(load_graph(args))
    pm = proximity_matrix(fc)
    if args.format == "csv":
        return _csv(pm.to_csv_rows())
    return _json({**fc.to_json(), "proximity": pm.to_json()["entries"]})


def cmd_closed_form(args) -> str:
    if args.family == "tcat":
        t = cf.tcaterpillar_counts(args.n)
        if args.format == "csv":
            return _csv([["f", "f33", "fnn"], [t.f, t.f33, t.fnn]])
        return _json({"n": args.n, "f": str(t.f), "f33": str(t.f33), "fnn": str(t.fnn)})
    fc = cf.path_counts(args.n) if args.family == "path" else cf.cycle_counts(args.n)
    if args.format == "csv":
        return _csv(proximity_matrix(fc).to_csv_rows())
    return _json(fc.to_json())


def cmd_classify(args) -> str:
    rows = cf.classify_vertices(proximity_matrix(forest_matrix_exact(load_graph(args))))
    if args.format == "json":
        return _json([{"vertex": r.vertex, "kind": r.kind,
                       "ratio": f"{r.ratio.numerator}/{r.ratio.denominator}"} for r in rows])
    return "".join(f"{r}\n" for r in rows)


def cmd_walk(args) -> str:
    _check_seed(args.seed)
    g = load_graph(args)
    cfg = WalkConfig.for_graph(g, args.walks, args.seed, workers=args.workers)
    est = simulate_walks(g, cfg)
    return _json(est.report(args.seed, proximity_matrix(forest_matrix_exact(g))))


def cmd_disseminate(args) -> str:
    _check_seed(args.seed)
    g = load_graph(args)
    if args.workers < 1:
        raise ValidationError("--workers must be positive")
    est = estimate_source_probabilities(g, args.trials, args.seed, workers=args.workers)
    return _json(est.report(args.seed, proximity_matrix(forest_matrix_exact(g))))


COMMANDS = {
    "gen": cmd_gen,
    "matrix": cmd_matrix,
    "closed-form": cmd_closed_form,
    "classify": cmd_classify,
    "walk": cmd_walk,
    "disseminate": cmd_disseminate,
}


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_verify(args) -> int:
    fixture = None
    if args.input:
        try:
            with open(args.input) as fh:
                fixture = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot load fixture {args.input}: {exc}") from None
    lines = []
    results = run_suites(args.scope, fixture, log=lines.append)
    total_failed = sum(r.failed for r in results)
    lines.append(f"{'OK' if not total_failed else 'FAILED'}: "
                 f"{sum(r.passed for r in results)} checks passed, {total_failed} failed")
    _write("".join(f"{x}\n" for x in lines), args.output)
    return EXIT_VERIFY if total_failed else EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return run_verify(args)
        _write(COMMANDS[args.command](args), args.output)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
