"""Command-line interface.

Subcommands: color, oracle, recognize, generate, check.  Reports are
JSON-only and byte-stable for a fixed input and seed: the ``timings``
field carries deterministic work counters, never wall-clock values, so
reruns compare equal.  Exit codes are a stable contract:

  0 success, 1 I/O or parse error, 2 class-membership failure,
  3 structure violation, 4 oracle budget exceeded, 5 generation
  exhausted, 6 campaign FAIL.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .engines import DEFAULT_ORACLE_BUDGET, oracle_work
from .errors import (
    ClassMembershipError,
    GraphFormatError,
    NoSupportedClassError,
    OracleBudgetExceeded,
    StructureViolation,
    WvcError,
)
from .formats import parse_graph, serialize_graph, sniff_format
from .graphs import WeightedColoring, validate_coloring
from .harness import CHECKS, GenSpec, PRESETS, campaign, generate, preset_for
from .pipelines import CLASS_ORDER, CLASS_PATTERNS, class_memberships, solve

OUT_DIR_ENV = "WVCOLOR_OUT_DIR"

EXIT_OK = 0
EXIT_IO = 1
EXIT_MEMBERSHIP = 2
EXIT_VIOLATION = 3
EXIT_BUDGET = 4
EXIT_EXHAUSTED = 5
EXIT_CAMPAIGN_FAIL = 6


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 means "not in class"
    # in this tool's contract, so route usage problems to the I/O code.
    def error(self, message):
        self.exit(EXIT_IO, f"error: {message}\n")


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail(code: int, doc: dict, out_path: str | None = None) -> int:
    _emit(doc, out_path)
    return code


def _load_graph(path: str, fmt: str | None):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}")
    fmt = fmt or sniff_format(path, text)
    return parse_graph(text, fmt)


def _coloring_doc(label: str, col: WeightedColoring, trace_events, counters) -> dict:
    return {
        "class": label,
        "chi_w": col.class_count,
        "classes": col.as_lists(),
        "trace": trace_events,
        "timings": counters,
        "verified": None,
    }


def _verify_from_serialized(doc: dict, input_path: str, fmt: str | None) -> bool:
    # Re-read both sides from their serialized forms, not in-memory state.
    replayed = json.loads(json.dumps(doc, sort_keys=True))
    g = _load_graph(input_path, fmt)
    col = WeightedColoring(tuple(frozenset(c) for c in replayed["classes"]))
    return bool(validate_coloring(g, col)) and replayed["chi_w"] == col.class_count


# -- subcommands -------------------------------------------------------------


def _cmd_color(args) -> int:
    try:
        g = _load_graph(args.input, args.format)
    except (GraphFormatError, WvcError) as exc:
        return _fail(EXIT_IO, {"error": "parse", "message": str(exc)}, args.out)
    try:
        label, col, trace = solve(g, args.cls, args.budget)
    except ClassMembershipError as exc:
        return _fail(
            EXIT_MEMBERSHIP,
            {"error": "class-membership", "class": exc.label,
             "pattern": exc.pattern, "witness": list(exc.embedding)},
            args.out,
        )
    except NoSupportedClassError as exc:
        return _fail(
            EXIT_MEMBERSHIP,
            {"error": "class-membership",
             "witnesses": {k: {"pattern": p, "embedding": list(e)}
                           for k, (p, e) in exc.witnesses.items()}},
            args.out,
        )
    except StructureViolation as exc:
        return _fail(
            EXIT_VIOLATION,
            {"error": "structure-violation", "rule": exc.rule,
             "message": str(exc), "payload": exc.payload},
            args.out,
        )
    except OracleBudgetExceeded as exc:
        return _fail(EXIT_BUDGET, {"error": "oracle-budget", "message": str(exc)},
                     args.out)
    events = trace.summary() if args.trace else []
    counters = {
        "input_vertices": g.n,
        "input_edges": g.edge_count(),
        "input_total_weight": g.total_weight(),
        "trace_events": len(trace.summary()),
    }
    doc = _coloring_doc(label, col, events, counters)
    if args.verify:
        doc["verified"] = _verify_from_serialized(doc, args.input, args.format)
        if not doc["verified"]:
            _emit(doc, args.out)
            sys.stderr.write("verification failed: report does not re-validate\n")
            return EXIT_IO
    _emit(doc, args.out)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    try:
        g = _load_graph(args.input, args.format)
    except (GraphFormatError, WvcError) as exc:
        return _fail(EXIT_IO, {"error": "parse", "message": str(exc)}, args.out)
    try:
        col, nodes = oracle_work(g, args.budget)
    except OracleBudgetExceeded as exc:
        return _fail(
            EXIT_BUDGET,
            {"error": "oracle-budget", "message": str(exc), "budget": args.budget},
            args.out,
        )
    doc = _coloring_doc("oracle", col, [], {
        "input_vertices": g.n,
        "input_edges": g.edge_count(),
        "input_total_weight": g.total_weight(),
        "oracle_nodes": nodes,
    })
    if args.verify:
        doc["verified"] = _verify_from_serialized(doc, args.input, args.format)
    _emit(doc, args.out)
    return EXIT_OK


def _cmd_recognize(args) -> int:
    try:
        g = _load_graph(args.input, args.format)
    except (GraphFormatError, WvcError) as exc:
        return _fail(EXIT_IO, {"error": "parse", "message": str(exc)}, args.out)
    memberships = {}
    for label, hit in class_memberships(g).items():
        if hit is None:
            memberships[label] = {"member": True, "witness": None}
        else:
            name, emb = hit
            memberships[label] = {
                "member": False,
                "witness": {"pattern": name, "embedding": list(emb)},
            }
    _emit({"memberships": memberships}, args.out)
    return EXIT_OK


def _genspec_from_args(args) -> GenSpec:
    class_filter: tuple[str, ...] = ()
    if args.cls:
        class_filter = CLASS_PATTERNS[args.cls]
    return GenSpec(
        n=args.n,
        p=args.p,
        seed=args.seed,
        class_filter=class_filter,
        require_prime=args.prime,
        max_weight=args.max_weight,
        max_attempts=args.max_attempts,
        profile=args.profile,
    )


def _cmd_generate(args) -> int:
    spec = _genspec_from_args(args)
    g = generate(spec)
    if g is None:
        hint = ""
        if args.cls and not args.profile:
            hint = (f"; plain rejection is hopeless for dense classes at this "
                    f"size, try --profile {args.cls} for a tuned mixture")
        return _fail(
            EXIT_EXHAUSTED,
            {"error": "generation-exhausted",
             "message": f"no accepted instance in {spec.max_attempts} attempts{hint}"},
        )
    sys.stdout.write(serialize_graph(g, args.format))
    return EXIT_OK


def _cmd_check(args) -> int:
    theorem = args.theorem.upper()
    if theorem not in CHECKS:
        return _fail(EXIT_IO, {"error": "usage",
                               "message": f"unknown theorem {args.theorem!r}",
                               "known": sorted(CHECKS)})
    if theorem in PRESETS:
        spec = preset_for(theorem, seed=args.seed)
        if args.n is not None:
            spec = replace(spec, n=args.n)
        if args.p is not None:
            spec = replace(spec, p=args.p)
        if args.max_weight is not None:
            spec = replace(spec, max_weight=args.max_weight)
        if args.max_attempts is not None:
            spec = replace(spec, max_attempts=args.max_attempts)
        if args.profile is not None:
            spec = replace(spec, profile=args.profile or None)
    else:
        spec = GenSpec(n=args.n or 9, p=args.p or 0.4, seed=args.seed,
                       max_weight=args.max_weight or 1,
                       max_attempts=args.max_attempts or 200,
                       profile=args.profile)
    out_dir = args.out or os.environ.get(OUT_DIR_ENV)
    result = campaign(spec, [theorem], args.trials, out_dir)
    _emit(result.to_dict(), None)
    return EXIT_CAMPAIGN_FAIL if result.failed() else EXIT_OK


# -- argument wiring ----------------------------------------------------------


def _add_io_args(p: _Parser) -> None:
    p.add_argument("input", help="graph file (extended DIMACS or JSON)")
    p.add_argument("--format", choices=("dimacs", "json"), default=None,
                   help="input format (default: sniffed)")
    p.add_argument("--out", default=None, help="also write the report here")


def build_parser() -> _Parser:
    parser = _Parser(prog="wvcolor",
                     description="Exact weighted vertex coloring for four "
                                 "forbidden-subgraph graph classes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph with a class pipeline")
    _add_io_args(p)
    p.add_argument("--class", dest="cls", default="auto",
                   choices=("auto",) + CLASS_ORDER)
    p.add_argument("--verify", action="store_true",
                   help="re-validate the serialized report against the input")
    p.add_argument("--trace", action="store_true",
                   help="include the full decision trace in the report")
    p.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("oracle", help="exact chi_w by branch and bound")
    _add_io_args(p)
    p.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("recognize", help="class membership with witnesses")
    _add_io_args(p)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("generate", help="emit a seeded rejection-sampled instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--class", dest="cls", default=None, choices=CLASS_ORDER,
                   help="rejection-filter to this class")
    p.add_argument("--prime", action="store_true")
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--max-attempts", type=int, default=200)
    p.add_argument("--profile", default=None,
                   help="tuned structured-instance mixture name")
    p.add_argument("--format", choices=("dimacs", "json"), default="dimacs")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("check", help="run a structure-theorem campaign")
    p.add_argument("--theorem", required=True,
                   help="check id, e.g. T11, T5P8, BFNH, DIFF-FORKBULL")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--max-attempts", type=int, default=None)
    p.add_argument("--profile", default=None)
    p.add_argument("--out", default=None,
                   help=f"counterexample directory (default ${OUT_DIR_ENV})")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WvcError as exc:
        sys.stdout.write(json.dumps(
            {"error": "internal", "message": str(exc)}, sort_keys=True) + "\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
