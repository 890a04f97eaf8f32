"""Command-line front end.

Exit codes: 0 success / verified, 1 property violation (non-rigid input,
scan violation, unresolved certificate), 2 input or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .fixedpoints import DatasetError, load_dataset
from .genus import genus_report, rigidity_check
from .proof import PreconditionError, certify
from .search import ScanParams, kosniowski_scan, stderr_progress

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass
class CommandOutcome:
    exit_code: int
    report: dict | None = None
    diagnostics: list[str] = field(default_factory=list)


def _dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _load(path: str):
    try:
        return load_dataset(path), None
    except FileNotFoundError:
        return None, CommandOutcome(EXIT_USAGE, diagnostics=[f"error: no such file: {path}"])
    except (OSError, DatasetError) as exc:
        return None, CommandOutcome(EXIT_USAGE, diagnostics=[f"error: {exc}"])


def cmd_compute(path: str) -> CommandOutcome:
    d, err = _load(path)
    if err:
        return err
    report = genus_report(d)
    out = CommandOutcome(EXIT_OK if report.rigid else EXIT_VIOLATION, report.to_json())
    if not report.rigid:
        out.diagnostics.append("not rigid: chi values are the q -> 0 limits only")
    return out


def cmd_rigidity(path: str) -> CommandOutcome:
    d, err = _load(path)
    if err:
        return err
    res = rigidity_check(d)
    report = {"rigid": res.rigid, "constant": res.constant.to_json() if res.rigid else None}
    return CommandOutcome(EXIT_OK if res.rigid else EXIT_VIOLATION, report)


def cmd_certify(path: str, force: bool = False) -> CommandOutcome:
    d, err = _load(path)
    if err:
        return err
    try:
        cert = certify(d, force=force)
    except PreconditionError as exc:
        return CommandOutcome(EXIT_USAGE, diagnostics=[f"error: {exc}"])
    code = EXIT_VIOLATION if cert["verdict"].startswith("unresolved") else EXIT_OK
    return CommandOutcome(code, cert)


def cmd_scan(half_dim: int, max_points: int, weight_bound: int, jobs: int = 1,
             dedupe_negation: bool = True, quiet: bool = False) -> CommandOutcome:
    try:
        params = ScanParams(half_dim, max_points, weight_bound, dedupe_negation)
    except ValueError as exc:
        return CommandOutcome(EXIT_USAGE, diagnostics=[f"error: {exc}"])
    if jobs < 1:
        return CommandOutcome(EXIT_USAGE, diagnostics=["error: --jobs must be at least 1"])
    report = kosniowski_scan(params, jobs=jobs, progress=None if quiet else stderr_progress)
    return CommandOutcome(EXIT_OK if not report.violations else EXIT_VIOLATION, report.to_json())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="txygenus",
        description="Equivariant T_{x,y}-genera of circle-action fixed-point data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="genus report for a dataset file")
    p.add_argument("path")

    p = sub.add_parser("rigidity", help="decide whether the localization sum is constant")
    p.add_argument("path")

    p = sub.add_parser("certify", help="cyclic-equality certificate for data with m <= floor(n/2)")
    p.add_argument("path")
    p.add_argument("--force", action="store_true", help="run even when m > floor(n/2)")

    p = sub.add_parser("scan", help="exhaustive search for violations of m >= floor(n/2) + 1")
    p.add_argument("--half-dim", type=int, required=True)
    p.add_argument("--max-points", type=int, required=True)
    p.add_argument("--weight-bound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-dedupe", action="store_true", help="keep both d and its negation")
    p.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
    return parser


def run(argv: list[str] | None = None) -> CommandOutcome:
    args = build_parser().parse_args(argv)
    if args.command == "compute":
        return cmd_compute(args.path)
    if args.command == "rigidity":
        return cmd_rigidity(args.path)
    if args.command == "certify":
        return cmd_certify(args.path, force=args.force)
    return cmd_scan(args.half_dim, args.max_points, args.weight_bound, args.jobs,
                    dedupe_negation=not args.no_dedupe, quiet=args.quiet)


def main(argv: list[str] | None = None) -> int:
    try:
        outcome = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if outcome.report is not None:
        print(_dump(outcome.report))
    for line in outcome.diagnostics:
        print(line, file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
