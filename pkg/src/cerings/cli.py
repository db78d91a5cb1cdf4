"""Command line interface.

Exit codes: 0 success, 2 invalid input, 3 enumeration budget exceeded,
4 theorem violation (a bug, with the offending ring written next to the
working directory for reproduction).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import DEFAULT_ENUM_CAP
from .errors import CapExceededError, RingError, TheoremViolationError
from .ringfile import dump_ring, load_ring
from .search import run_search
from .verify import (analyze, build_constructor, corpus_run, corpus_summary,
                     default_corpus_text, parse_corpus_text, _safe_filename)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_VIOLATION = 4


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                        help="enumeration budget for exhaustive scans "
                             f"(default {DEFAULT_ENUM_CAP})")
    parser.add_argument("--det", action=argparse.BooleanOptionalAction,
                        default=True,
                        help="determinism mode (scans in this implementation "
                             "are always deterministic; accepted for "
                             "interface stability)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cerings",
        description="Construct, analyze and verify finite algebras over "
                    "prime fields, centered on the centrally-essential "
                    "predicate.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a ring and write its structure constants")
    p_construct.add_argument(
        "spec", nargs="+",
        help="constructor spec: 'exterior P N' | 'matrix N P' | "
             "'triangular N P' | 'field P' | 'group P NAME' | "
             "'random P DIM SEED' | 'product A B' where A, B are ring "
             "files or parenthesized specs")
    p_construct.add_argument("-o", "--output", required=True,
                             help="output ring file")
    _add_common(p_construct)

    p_analyze = sub.add_parser("analyze", help="analyze one ring file")
    p_analyze.add_argument("ring", help="input ring file")
    p_analyze.add_argument("--json", action="store_true",
                           help="emit the report as one JSON object")
    _add_common(p_analyze)

    p_verify = sub.add_parser(
        "verify", help="analyze a whole corpus and check every implication")
    p_verify.add_argument("corpus", nargs="?",
                          help="corpus description file")
    p_verify.add_argument("--default", action="store_true",
                          help="use the built-in corpus")
    p_verify.add_argument("--reports", action="store_true",
                          help="print the full per-ring reports as well")
    _add_common(p_verify)

    p_search = sub.add_parser(
        "search", help="random search for noteworthy rings")
    p_search.add_argument("-p", type=int, required=True, help="field modulus")
    p_search.add_argument("-d", "--dim", type=int, required=True,
                          help="algebra dimension")
    p_search.add_argument("-n", "--count", required=True,
                          help="number of samples, or 'all' for exhaustive "
                               "table enumeration (tiny shapes only)")
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("-o", "--out-dir", default=".",
                          help="directory for centrally essential "
                               "noncommutative finds (default: .)")
    _add_common(p_search)
    return parser


def _cmd_construct(args) -> int:
    algebra, grading = build_constructor(args.spec, base_dir=Path.cwd())
    dump_ring(args.output, algebra, grading)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    algebra, grading = load_ring(args.ring)
    try:
        report = analyze(algebra, grading, args.cap)
    except TheoremViolationError:
        dump_ring(Path.cwd() / f"violation_{_safe_filename(algebra.name)}.ring",
                  algebra, grading)
        raise
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text(), end="")
    if report.centrally_essential is None:
        print("error: central essentiality undecided at this cap",
              file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.default == (args.corpus is not None):
        raise RingError("give exactly one of a corpus file or --default")
    if args.default:
        members = parse_corpus_text(default_corpus_text())
    else:
        path = Path(args.corpus)
        members = parse_corpus_text(path.read_text(encoding="utf-8"),
                                    base_dir=path.parent)
    reports = corpus_run(members, cap=args.cap, violation_dir=Path.cwd())
    if args.reports:
        for report in reports:
            print(report.to_text())
    print(corpus_summary(reports), end="")
    return EXIT_OK


def _cmd_search(args) -> int:
    outcome = run_search(args.p, args.dim, args.count, seed=args.seed,
                         out_dir=Path(args.out_dir), cap=args.cap)
    print(outcome.tally_text(), end="")
    for path in outcome.written:
        print(f"wrote {path}")
    return EXIT_OK


_DISPATCH = {
    "construct": _cmd_construct,
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "search": _cmd_search,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except CapExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
