"""Command-line front end: ``analyze``, ``sweep`` and ``export``.

Exit codes: 0 when no check failed, 1 when any check failed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .codes import LinearCode, code_from_incidence, predict_code_params
from .gf import format_matrix
from .graph import build_unit_graph, format_graph
from .ring import factorize, is_prime
from .verify import (
    Budgets,
    SweepSummary,
    VerificationReport,
    default_q,
    dump_record,
    sweep,
    to_record,
    verify_one,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _budgets(args: argparse.Namespace) -> Budgets:
    b = Budgets()
    if args.budget is not None:
        if args.budget < 1:
            raise UsageError("budget must be positive")
        b = replace(b, enumeration=args.budget)
    if args.max_dual_weight is not None:
        if args.max_dual_weight < 1:
            raise UsageError("max dual weight must be positive")
        b = replace(b, max_dual_weight=args.max_dual_weight)
    return b


def _check_n(n: int) -> None:
    if n < 2:
        raise UsageError("n must be ≥ 2")


def _check_q(q: int | None) -> None:
    if q is not None and not is_prime(q):
        raise UsageError(f"q must be prime, got {q}")


# -- output formats -----------------------------------------------------------


def _fmt(x) -> str:
    return "-" if x is None else str(x)


def format_text(r: VerificationReport) -> str:
    rec = to_record(r)
    p, c = rec["predicted"], rec["computed"]
    lines = [f"G(Z_{r.n})  n = {factorize(r.n)}  q = {r.q}  shape {r.shape.value}", ""]
    rows = [
        ("edges", p["edges"], c["edges"]),
        ("edge connectivity", p["lambda"], c["lambda"]),
        ("diameter (bound)", p["diamBound"], c["diameter"]),
        ("girth", p["girth"], c["girth"]),
        ("code length", p["code"]["length"], c["code"]["length"]),
        ("code dimension", p["code"]["dim"], c["code"]["dim"]),
        ("code distance", p["code"]["d"], _distance_text(c["code"])),
        ("dual dimension", p["dual"]["dim"], c["dual"]["dim"]),
        ("dual distance", p["dual"]["d"], _distance_text(c["dual"])),
    ]
    lines.append(f"{'':20}{'predicted':>12}{'computed':>16}")
    lines.extend(f"{name:20}{_fmt(a):>12}{_fmt(b):>16}" for name, a, b in rows)
    lines.append("")
    for ch in r.checks:
        tag = " [CONJECTURE]" if ch.kind.value == "CONJECTURE" else ""
        lines.append(f"{ch.status.value:8}{ch.name}{tag}  {ch.detail}")
    lines.append("")
    lines.append(f"elapsed {r.elapsed_ms:.1f} ms")
    return "\n".join(lines)


def _distance_text(d: dict) -> str | None:
    if d.get("d") is not None:
        return str(d["d"])
    lo, hi = d.get("dLower"), d.get("dUpper")
    if lo is None and hi is None:
        hi = d.get("witnessBound")
    if lo is None and hi is None:
        return None
    return f"{_fmt(lo)}..{_fmt(hi)}"


def format_csv(r: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "q", "shape", "check", "kind", "status", "detail"])
    for ch in r.checks:
        w.writerow([r.n, r.q, r.shape.value, ch.name, ch.kind.value, ch.status.value, ch.detail])
    return buf.getvalue().rstrip("\n")


# -- commands -----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    _check_n(args.n)
    _check_q(args.q)
    r = verify_one(args.n, args.q, _budgets(args))
    if args.format == "json":
        print(dump_record(to_record(r)))
    elif args.format == "csv":
        print(format_csv(r))
    else:
        print(format_text(r))
    return EXIT_FAIL if r.failures else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.n_from < 2:
        raise UsageError("n must be ≥ 2")
    if args.n_from > args.n_to:
        raise UsageError(f"--from {args.n_from} exceeds --to {args.n_to}")
    for q in args.q or []:
        _check_q(q)
    if args.jobs < 1:
        raise UsageError("jobs must be positive")
    budgets = _budgets(args)
    summary = SweepSummary()
    out = open(args.out, "w", encoding="utf-8") if args.out else None
    try:
        for r in sweep(args.n_from, args.n_to, args.q, budgets, args.jobs):
            summary.add(r)
            if out is not None:
                # timings vary between runs; leave them out so files compare byte for byte
                out.write(dump_record(to_record(r, timing=False)) + "\n")
                out.flush()
    finally:
        if out is not None:
            out.close()
    print("\n".join(summary.lines()))
    return EXIT_FAIL if summary.fail_count else EXIT_OK


def _param_record(n: int, q: int, code: LinearCode) -> dict:
    pc = predict_code_params(n, q)
    return {
        "n": n,
        "q": q,
        "length": code.length,
        "dim": code.dimension,
        "dualDim": code.dual_dimension,
        "predicted": {
            "dim": pc.dimension,
            "d": pc.min_distance,
            "dualDim": pc.dual_dimension,
            "dualD": pc.dual_min_distance,
            "basis": pc.basis.value,
        },
    }


def cmd_export(args: argparse.Namespace) -> int:
    _check_n(args.n)
    _check_q(args.q)
    q = args.q if args.q is not None else default_q(args.n)
    g = build_unit_graph(args.n)
    params = None
    if args.what == "graph":
        text = format_graph(g)
    else:
        code = code_from_incidence(g, q)
        if args.what == "incidence":
            text = format_matrix(code.spanning)
        elif args.what == "generator":
            text = format_matrix(code.generator)
            params = _param_record(args.n, q, code)
        else:
            text = format_matrix(code.parity_check)
            params = _param_record(args.n, q, code)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    path = Path(args.out)
    path.write_text(text, encoding="utf-8")
    if params is not None:
        path.with_name(path.name + ".json").write_text(json.dumps(params) + "\n", encoding="utf-8")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="codewords enumerated for an exact minimum distance (default 2^26)")
    p.add_argument("--max-dual-weight", type=int, default=None,
                   help="largest dependent column set searched for the dual distance (default 6)")


def _q_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated primes, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitcodes", description="Unit graphs of Z_n and the linear codes of their incidence matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="verify every prediction for one n")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--q", type=int, default=None, help="field size (default 2 for odd n, 3 for even n)")
    a.add_argument("--format", choices=("text", "json", "csv"), default="text")
    _add_budget_flags(a)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="verify a range of n")
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    s.add_argument("--q", type=_q_list, default=None, help="comma-separated field sizes")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", default=None, help="write one JSON report per line")
    _add_budget_flags(s)
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("export", help="write a graph or matrix file")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--q", type=int, default=None)
    e.add_argument("--what", choices=("graph", "incidence", "generator", "paritycheck"), required=True)
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
