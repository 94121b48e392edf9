"""Command line interface: classification, sweeps, families, Choi matrices.

Exit codes: 0 success, 1 usage error (bad flags or subcommand), 2 data error
(unreadable input, malformed channel JSON, out-of-domain parameters, bad
environment values), 3 internal-consistency failure (a closed form and its
numeric oracle disagree).
"""

from __future__ import annotations

import argparse
import json
import sys

from nonloc.channels import QubitChannel, choi
from nonloc.families import FAMILY_KINDS, analytic_generating_range, family_cross_check
from nonloc.nonlocality import InternalConsistencyError, classify
from nonloc.sweep import MODES, SweepRequest, region_summary, run_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INCONSISTENT = 3


class _UsageError(Exception):
    """Flag combinations argparse cannot validate on its own."""


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def _load_channel(source: str) -> QubitChannel:
    data = json.loads(_read_text(source))
    if not isinstance(data, dict) or "lambda" not in data:
        raise ValueError('channel JSON must be an object with a "lambda" key')
    return QubitChannel.from_json(data)


def _pair_bounds(values):
    if values is None:
        return None
    if len(values) % 2:
        raise _UsageError("--bounds takes lo hi pairs, got an odd count of values")
    return tuple((values[i], values[i + 1]) for i in range(0, len(values), 2))


def _request_from_args(args, out=None, fmt="csv") -> SweepRequest:
    return SweepRequest(
        mode=args.mode,
        resolution=args.res,
        t3=args.t3,
        bounds=_pair_bounds(args.bounds),
        family=args.family,
        p=args.p,
        out=out,
        fmt=fmt,
    )


def _cmd_check(args) -> int:
    print(json.dumps(classify(_load_channel(args.channel)).to_json()))
    return EXIT_OK


def _cmd_choi(args) -> int:
    m = choi(_load_channel(args.channel))
    print(json.dumps([[[v.real, v.imag] for v in row] for row in m.tolist()]))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    ds = run_sweep(_request_from_args(args, out=args.out, fmt=args.format))
    print(f"wrote {len(ds)} rows to {args.out}")
    return EXIT_OK


def _cmd_family(args) -> int:
    info = analytic_generating_range(args.kind)
    checked, mismatches, cp_failures = family_cross_check(args.kind, args.grid)
    ok = mismatches == 0 and cp_failures == 0
    print(f"{args.kind}: generating range {info.description}")
    print(
        f"cross-check {'PASS' if ok else 'FAIL'}: {checked} points, "
        f"{mismatches} range mismatches, {cp_failures} CP failures"
    )
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _cmd_report(args) -> int:
    print(json.dumps(region_summary(run_sweep(_request_from_args(args)))))
    return EXIT_OK


def _sweep_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", required=True, choices=MODES, help="grid layout")
    p.add_argument("--res", type=int, default=101, help="grid resolution per axis")
    p.add_argument("--t3", type=float, default=0.0, help="third-axis channel shift")
    p.add_argument(
        "--bounds", type=float, nargs="+", metavar="B", help="lo hi per grid axis"
    )
    p.add_argument("--family", help="family kind (family_1d mode only)")
    p.add_argument(
        "--p", type=float, default=0.0, help="shift weight for gad/shifted_depolarizing"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonloc",
        description="Classify qubit channels by nonlocality-generation conditions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="classify one channel, print JSON")
    check.add_argument("channel", help="channel JSON file, or - for stdin")
    check.set_defaults(func=_cmd_check)

    choi_cmd = sub.add_parser("choi", help="print the 4x4 Choi matrix as [re, im]")
    choi_cmd.add_argument("channel", help="channel JSON file, or - for stdin")
    choi_cmd.set_defaults(func=_cmd_choi)

    sweep = sub.add_parser("sweep", help="grid-evaluate a region, write CSV/JSON")
    _sweep_flags(sweep)
    sweep.add_argument("--out", required=True, help="output file path")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.set_defaults(func=_cmd_sweep)

    family = sub.add_parser(
        "family", help="print a family's generating range and cross-check it"
    )
    family.add_argument("kind", choices=FAMILY_KINDS)
    family.add_argument("--grid", type=int, default=201, help="grid resolution")
    family.set_defaults(func=_cmd_family)

    report = sub.add_parser("report", help="print region counts for a sweep")
    _sweep_flags(report)
    report.set_defaults(func=_cmd_report)
    return parser


def cli_main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage problems; remap the
        # latter to this tool's usage code.
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
