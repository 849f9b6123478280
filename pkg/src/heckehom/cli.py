"""
Command-line driver.

    heckehom verify <coxeter|hecke|d-complex|injective-words> --n N [--field DESC]
    heckehom tor|ext|stability --n N --field DESC --dmax D
    global: --json-out PATH, --csv-out PATH, --dump-matrices PATH, --guard-override

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error,
3 malformed or unusable field descriptor, 4 guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .homalg import GuardExceeded
from .reports import Report
from .scalars import FieldDescriptorError, parse_field
from .suites import SUITES, SuiteConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FIELD, EXIT_GUARD = 0, 1, 2, 3, 4

VERIFY_SUITES = ("coxeter", "hecke", "d-complex", "injective-words")
VERIFY_MAX_N = 6
DEFAULT_FIELD = {"coxeter": "generic", "hecke": "generic", "d-complex": "generic",
                 "injective-words": "rational:q=1"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _globals(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json-out", default=d, metavar="PATH")
    p.add_argument("--csv-out", default=d, metavar="PATH")
    p.add_argument("--dump-matrices", default=d, metavar="PATH",
                   help="write the boundary matrices of the suite's main complex")
    p.add_argument("--guard-override", action="store_true",
                   default=argparse.SUPPRESS if suppress else False)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heckehom", parents=[_globals(False)],
                     description="Exact verification suites for type-A Hecke algebra homology.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    local = _globals(True)

    v = sub.add_parser("verify", parents=[local], help="run a verification suite")
    v.add_argument("suite", choices=VERIFY_SUITES)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--field", default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=None,
                   help="random triples for associativity (default 1000)")

    for name in ("tor", "ext", "stability"):
        h = sub.add_parser(name, parents=[local], help=f"{name} of the trivial module")
        h.add_argument("--n", type=int, required=True)
        h.add_argument("--field", required=True)
        h.add_argument("--dmax", type=int, required=True)
    return parser


def _dump(path: str, suite: str, n: int, field) -> None:
    if suite == "d-complex":
        from .dcomplex import build_D
        C, label = build_D(n, field).complex, f"D({n})"
    elif suite == "injective-words":
        from .injective_words import build_C
        C, label = build_C(n, field), f"C({n})"
    else:
        raise ValueError(f"no matrices to dump for suite {suite!r}")
    degrees = []
    for r in C.degrees():
        if r - 1 < C.lo:
            continue
        M = C.boundary(r)
        degrees.append({"degree": r, "rows": M.nrows, "cols": M.ncols,
                        "entries": [[field.to_str(x) for x in row] for row in M.to_dense()]})
    with open(path, "w") as fh:
        json.dump({"schema": 1, "complex": label, "field": field.descriptor,
                   "boundaries": degrees}, fh, indent=1)
        fh.write("\n")


def report_json(suite: str, params: dict, report: Report, duration_ms: int) -> dict:
    return {"schema": 1, "suite": suite, "params": params,
            "checks": [c.as_json() for c in report.checks], "duration_ms": duration_ms}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, default=str) + "\n"


def report_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "anchor", "status", "payload"])
    for c in report.checks:
        w.writerow([c.id, c.anchor, "pass" if c.ok else "fail",
                    json.dumps(c.payload, sort_keys=True, default=str)])
    return buf.getvalue()


def _summary(suite: str, report: Report) -> str:
    lines = [f"{suite}: {'PASS' if report.ok else 'FAIL'}"]
    for c in report.checks:
        lines.append(f"  [{'pass' if c.ok else 'FAIL'}] {c.id} ({c.anchor})")
        if c.id in ("tor-table", "ext-table"):
            lines.append("    " + "  ".join(f"d={d}:{x}" for d, x in enumerate(c.payload["dims"])))
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    suite = args.suite if args.command == "verify" else args.command
    if args.n < 0 or (getattr(args, "dmax", 0) or 0) < 0:
        print("heckehom: error: --n and --dmax must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    desc = args.field if args.field is not None else DEFAULT_FIELD[suite]
    try:
        field = parse_field(desc)
    except FieldDescriptorError as e:
        print(f"heckehom: bad field descriptor: {e}", file=sys.stderr)
        return EXIT_FIELD
    if suite == "injective-words" and not field.q_is_one:
        print(f"heckehom: injective-words needs q = 1, got {desc}", file=sys.stderr)
        return EXIT_FIELD

    if args.command == "verify" and args.n > VERIFY_MAX_N and not args.guard_override:
        print(f"heckehom: guard exceeded: n={args.n} > {VERIFY_MAX_N}", file=sys.stderr)
        return EXIT_GUARD

    d_max = getattr(args, "dmax", None)
    cfg = SuiteConfig(n=args.n, field=field, d_max=d_max if d_max is not None else 3,
                      seed=getattr(args, "seed", 0),
                      samples=getattr(args, "samples", None) or 1000,
                      guard_override=args.guard_override)
    t0 = time.perf_counter()
    try:
        report = SUITES[suite](cfg)
    except GuardExceeded as e:
        print(f"heckehom: guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    duration = int(round((time.perf_counter() - t0) * 1000))

    params = {"n": args.n, "field": field.descriptor, "dmax": d_max}
    doc = report_json(suite, params, report, duration)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(dumps(doc))
        out.write(_summary(suite, report))
    else:
        out.write(dumps(doc))
    if args.csv_out:
        with open(args.csv_out, "w", newline="") as fh:
            fh.write(report_csv(report))
    if args.dump_matrices:
        try:
            _dump(args.dump_matrices, suite, args.n, field)
        except ValueError as e:
            print(f"heckehom: {e}", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK if report.ok else EXIT_FAIL


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
