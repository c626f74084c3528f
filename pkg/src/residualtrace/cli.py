"""Command line interface.

Subcommands read JSON from a file or stdin ("-") and write canonical JSON
to stdout or a file, so they compose by piping.  Exit codes: 0 on success,
1 when the mathematics rejects the input (domain errors, failed detection),
2 for malformed documents or bad usage.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .currents import ZeroCurrent
from .errors import DomainError, SchemaError
from .radon import closedness_check, radon
from .reconstruct import continue_current, reconstruct
from .traces import traces
from .verify import DEFAULT_SEED, DEFAULT_TOLERANCE, human_summary, verify_report

USAGE_EXIT = 2
DOMAIN_EXIT = 1


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SchemaError("input", f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_current(path: str):
    return jsonio.current_from_obj(jsonio.loads(_read(path), "current"), "current")


def cmd_trace(args) -> int:
    current = _load_current(args.input)
    if isinstance(current, ZeroCurrent):
        raise DomainError("the zero current has no finite trace data to emit")
    count = args.count if args.count is not None else 2 * current.degree + 2
    if count < 1:
        raise DomainError("--count must be at least 1")
    t = traces(current, count)
    _write(args.output, jsonio.canonical_dumps(jsonio.traces_to_obj(t)))
    return 0


def cmd_reconstruct(args) -> int:
    t = jsonio.traces_from_obj(jsonio.loads(_read(args.input), "traces"), "traces")
    d_max = args.dmax if args.dmax is not None else max(1, len(t) // 2)
    report = reconstruct(t, d_max)
    if report.current is None:
        raise DomainError(
            "recurrence or numerator coefficients are not polynomial; "
            "no current within this model reproduces the traces")
    _write(args.output, jsonio.canonical_dumps(jsonio.current_to_obj(report.current)))
    if args.report:
        payload = {
            "degree": report.degree,
            "residual_violations": report.residual_violations,
            "meromorphic_coefficients": report.meromorphic_coefficients,
        }
        _write(args.report, jsonio.canonical_dumps(payload))
    return 0


def cmd_radon(args) -> int:
    current = _load_current(args.input)
    if isinstance(current, ZeroCurrent):
        raise DomainError("the zero current transforms to zero; nothing to emit")
    k_max = args.kmax if args.kmax is not None else 2 * current.degree + current.n
    u = radon(current, k_max)
    payload = {"u_ab": [jsonio.ratfunc_to_obj(f) for f in u]}
    if args.check_closedness:
        top = k_max - current.n
        violations = closedness_check(u, range(top + 1)) if top >= 0 else []
        payload["closedness_violations"] = [[i, k] for i, k in violations]
    _write(args.output, jsonio.canonical_dumps(payload))
    return 0


def cmd_continue(args) -> int:
    batch = jsonio.series_from_obj(jsonio.loads(_read(args.input), "series"), "series")
    d_max = args.dmax if args.dmax is not None else max(1, len(batch) // 2)
    report = continue_current(batch, d_max, args.num_deg, args.den_deg)
    if report.current is None:
        raise DomainError(
            "continued traces have non-polynomial recurrence coefficients; "
            "no current within this model matches them")
    _write(args.output, jsonio.canonical_dumps(jsonio.current_to_obj(report.current)))
    return 0


def cmd_verify(args) -> int:
    report = verify_report(seed=args.seed, tolerance=args.tolerance)
    _write(args.output, jsonio.canonical_dumps(report))
    print(human_summary(report), file=sys.stderr)
    return 0 if report["pass"] else DOMAIN_EXIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="residual-trace",
        description="Exact fiber traces, reconstruction, and line-coordinate "
                    "transforms of rational residue data (JSON in, JSON out).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("input", nargs="?", default="-",
                       help="input JSON file, or - for stdin (default)")
        p.add_argument("-o", "--output", default=None,
                       help="output file (default: stdout)")

    p = sub.add_parser("trace", help="emit traces u_0..u_{m} of a current")
    add_io(p)
    p.add_argument("--count", type=int, default=None,
                   help="number of traces (default 2d+2)")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("reconstruct", help="rebuild a current from traces")
    add_io(p)
    p.add_argument("--dmax", type=int, default=None,
                   help="fiber degree bound (default: half the trace count)")
    p.add_argument("--report", default=None,
                   help="also write a JSON reconstruction report to this file")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("radon", help="emit chart traces in line coordinates")
    add_io(p)
    p.add_argument("--kmax", type=int, default=None,
                   help="largest chart trace index (default 2d+n)")
    p.add_argument("--check-closedness", action="store_true",
                   help="include the closedness violation list in the output")
    p.set_defaults(func=cmd_radon)

    p = sub.add_parser("continue",
                       help="rebuild a current from series-sampled traces")
    add_io(p)
    p.add_argument("--dmax", type=int, default=None,
                   help="fiber degree bound (default: half the series count)")
    p.add_argument("--num-deg", type=int, required=True,
                   help="numerator degree bound for the rationality test")
    p.add_argument("--den-deg", type=int, required=True,
                   help="denominator degree bound for the rationality test")
    p.set_defaults(func=cmd_continue)

    p = sub.add_parser("verify", help="run the seeded self-check suites")
    p.add_argument("-o", "--output", default=None,
                   help="output file for the JSON report (default: stdout)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize others
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT
    except BrokenPipeError:
        return DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
