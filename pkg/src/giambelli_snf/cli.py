"""Command-line front end.

Exit codes: 0 when everything matched, 1 on bad input, 2 when a computed
Smith form disagrees with its prediction.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .giambelli_matrices import build_matrix
from .outside_decomp import DirectionVector, Kind, build_decomposition, canonical_direction, enumerate_decompositions
from .shapes import Partition
from .smith import DEFAULT_MINOR_BOUND, verify_theorem
from .specialize import SPECIALIZATIONS
from .sweep import WORKERS_ENV, default_workers, run_instances, ssyt_agreement, summarize, sweep_instances

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _partition(text: str) -> Partition:
    try:
        p = Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid partition {text!r}: {exc}") from None
    if not p.parts:
        raise UsageError(f"invalid partition {text!r}: must be nonempty")
    return p


def _direction(args, p: Partition) -> tuple[str, DirectionVector]:
    if args.direction is not None:
        try:
            return args.direction.upper(), DirectionVector.parse(args.direction, p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    kind = Kind(args.kind or "horizontal")
    return kind.value, canonical_direction(p, kind)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def cmd_snf(args) -> int:
    p = _partition(args.partition)
    label, direction = _direction(args, p)
    dec = build_decomposition(p, direction)
    mat = build_matrix(p, dec, args.spec)
    report = verify_theorem(
        p, dec, args.spec, label=label, oracle=args.oracle, both_predictions=args.both_predictions, matrix=mat
    )
    if args.format == "json":
        out = report.to_json()
        if args.show_matrix:
            out["matrix"] = mat.to_json(label)["entries"]
        print(_dump(out))
    else:
        print(f"partition:      {p}")
        print(f"decomposition:  {label} ({dec.label()})")
        print(f"specialization: {report.specialization}")
        if args.show_matrix:
            print("matrix:")
            for row in mat.entries:
                print("  [" + ", ".join(str(e) for e in row) + "]")
        print("snf:            [" + ", ".join(str(d) for d in report.snf) + "]")
        print("predicted:      [" + ", ".join(str(d) for d in report.predicted) + "]")
        print(f"match:          {str(report.match).lower()}")
        if report.oracle_checked:
            print(f"oracle:         {str(report.oracle_match).lower()}")
        if report.candidates is not None:
            for name, ok in report.candidates.items():
                print(f"candidate {name}: {str(ok).lower()}")
    ok = report.match and report.oracle_match is not False
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_list_decompositions(args) -> int:
    p = _partition(args.partition)
    decs = list(enumerate_decompositions(p))
    shown = decs if args.limit is None else decs[: args.limit]
    if args.format == "json":
        print(
            _dump(
                {
                    "partition": p.to_json(),
                    "total": len(decs),
                    "decompositions": [
                        {"direction": d.direction.steps, "strips": [s.to_json() for s in d.strips]} for d in shown
                    ],
                }
            )
        )
    else:
        for d in shown:
            strips = " | ".join(" ".join(f"({c.row},{c.col})" for c in s) for s in d.strips)
            print(f"{d.label()}: {strips}")
        print(f"total: {len(decs)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    specs = args.spec or ["phi-t"]
    kinds = args.kinds.split(",") if args.kinds else [k.value for k in Kind]
    try:
        kinds = [Kind(k.strip()) for k in kinds]
    except ValueError as exc:
        raise UsageError(f"unknown kind in --kinds: {exc}") from None
    instances = sweep_instances(
        args.max_size, specs, kinds=kinds, random_decomps=args.random_decomps, seed=args.seed
    )
    reports = run_instances(
        instances,
        oracle=args.oracle,
        bound=args.oracle_bound,
        both_predictions=args.report_both_predictions,
        workers=args.workers,
    )
    summary = summarize(reports)
    if args.report_both_predictions:
        summary["instances"] = [
            {
                "partition": r.partition.to_json(),
                "decomposition": r.decomposition,
                "specialization": r.specialization,
                "candidates": r.candidates,
            }
            for r in reports
            if r.candidates is not None
        ]
    if args.format == "json":
        print(_dump(summary))
    else:
        print(f"total:    {summary['total']}")
        print(f"matched:  {summary['matched']}")
        if args.oracle:
            print(f"oracle:   {summary['oracle_checked']} checked, {summary['oracle_failures']} failed")
        for name, tally in sorted(summary.get("candidate_matches", {}).items()):
            n = tally["instances"]
            parts = ", ".join(f"{k} {v}/{n}" for k, v in sorted(tally.items()) if k != "instances")
            print(f"candidates ({name}): {parts}")
        for bad in summary["mismatched"]:
            print(f"MISMATCH {bad['partition']} {bad['decomposition']} {bad['specialization']}")
    return EXIT_OK if not summary["mismatched"] else EXIT_MISMATCH


def cmd_oracle_check(args) -> int:
    result = ssyt_agreement(args.max_size, args.max_t)
    if args.format == "json":
        print(_dump(result))
    else:
        print(f"checked:  {result['checked']}")
        print(f"failures: {len(result['failures'])}")
        for f in result["failures"]:
            print(f"FAIL {f['shape']} t={f['t']} {f['specialization']}")
    return EXIT_OK if not result["failures"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="giambelli-snf", description="Smith forms of ribbon Schur matrices under specialization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("json", "text"), default="text")
    spec_choices = tuple(SPECIALIZATIONS)

    p = sub.add_parser("snf", help="Smith form of one instance")
    p.add_argument("--partition", required=True, help='comma separated parts, e.g. "4,3,1"')
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--kind", choices=[k.value for k in Kind])
    sel.add_argument("--direction", help="U/R string of length d - 1")
    p.add_argument("--spec", choices=spec_choices, default="phi-t")
    p.add_argument("--show-matrix", action="store_true")
    p.add_argument("--oracle", action="store_true", help="also check against gcds of minors")
    p.add_argument("--both-predictions", action="store_true")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("list-decompositions", help="enumerate outside decompositions")
    p.add_argument("--partition", required=True)
    p.add_argument("--limit", type=_nonnegative)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_list_decompositions)

    p = sub.add_parser("verify", help="sweep all partitions up to a size")
    p.add_argument("--max-size", type=_positive, required=True)
    p.add_argument("--spec", choices=spec_choices, action="append")
    p.add_argument("--kinds", help="comma separated subset of horizontal,hook,rim")
    p.add_argument("--random-decomps", type=_nonnegative, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--oracle-bound", type=_positive, default=DEFAULT_MINOR_BOUND)
    p.add_argument("--report-both-predictions", action="store_true")
    p.add_argument("--workers", type=_positive, default=None, help=f"defaults to ${WORKERS_ENV} or 1")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", help="compare images with tableau counts")
    p.add_argument("--max-size", type=_nonnegative, default=6)
    p.add_argument("--max-t", type=_positive, default=4)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 0) is None:
        try:
            args.workers = default_workers()
        except ValueError:
            print(f"{parser.prog}: error: bad {WORKERS_ENV} value", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
