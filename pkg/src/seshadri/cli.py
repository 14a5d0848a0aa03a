"""Command-line interface: ``seshadri compute | table | verify | pell``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .bounds import BoundReport, full_report
from .exact import SquareDegreeError, is_square, isqrt
from .omega import verify_lemma
from .pell import convergent_pairs, cf_expand, pell_primitive

SCHEMA_VERSION = 1
CSV_FIELDS = [
    "N", "r", "is_square", "steffens", "p0", "m0", "szemberg",
    "pell_l0", "pell_k0", "conjectural", "equality_d",
]
DISPLAY_CONTEXT = Context(prec=12, rounding=ROUND_HALF_EVEN)


class UsageError(Exception):
    pass


def exact_str(q: Fraction | int | None) -> str | None:
    if q is None:
        return None
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def decimal_str(q: Fraction | int | None) -> str | None:
    if q is None:
        return None
    q = Fraction(q)
    return str(DISPLAY_CONTEXT.divide(Decimal(q.numerator), Decimal(q.denominator)))


def sqrt_decimal_str(n: int) -> str:
    return str(DISPLAY_CONTEXT.sqrt(Decimal(n)))


def report_record(rep: BoundReport) -> dict:
    """Flat, ordered record of a report; exact fields are ``num/den`` strings."""
    sz = rep.szemberg
    return {
        "N": rep.n,
        "r": rep.r,
        "is_square": rep.is_square,
        "steffens": rep.steffens,
        "strict": rep.strict,
        "p0": sz.p0 if sz else None,
        "m0": sz.m0 if sz else None,
        "szemberg": exact_str(sz.value) if sz else None,
        "pell_l0": rep.pell.l0 if rep.pell else None,
        "pell_k0": rep.pell.k0 if rep.pell else None,
        "conjectural": exact_str(rep.conjectural),
        "upper_bound_sq": rep.upper_bound_sq,
        "equality_d": rep.equality_case,
        "display_only": {
            "szemberg": decimal_str(sz.value) if sz else None,
            "conjectural": decimal_str(rep.conjectural),
            "upper_bound": sqrt_decimal_str(rep.n),
        },
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema={SCHEMA_VERSION}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        writer.writerow([_csv_cell(rec[f]) for f in CSV_FIELDS])
    return buf.getvalue()


def render_text(rep: BoundReport) -> str:
    lines = [f"N = {rep.n}, r = {rep.r}"]
    if rep.r > 1:
        lines.append("  (r >= 2: only the floor(sqrt(N/r)) lower bound is available)")
        lines.append(f"  {'Steffens-type (proved)':<28} {rep.steffens}")
        lines.append(f"  {'upper (sqrt(N/r))':<28} sqrt({rep.n}/{rep.r})")
        if rep.equality_case is not None:
            lines.append(f"  equality: eps(L;{rep.r}) = {rep.equality_case}  (N = {rep.r}*{rep.equality_case}^2)")
        return "\n".join(lines) + "\n"

    if rep.is_square:
        lines.append(f"  {'Steffens (proved)':<28} {rep.steffens}")
        lines.append(f"  equality: eps(L;1) = {rep.equality_case}  (N is a square)")
        return "\n".join(lines) + "\n"

    sz = rep.szemberg
    rows = [
        ("Steffens (proved)", str(rep.steffens), decimal_str(rep.steffens)),
        ("improved (proved)", exact_str(sz.value), decimal_str(sz.value)),
        ("Pell (conjectural)", exact_str(rep.conjectural), decimal_str(rep.conjectural)),
        ("upper (√N)", f"√{rep.n}", sqrt_decimal_str(rep.n)),
    ]
    for label, exact, approx in rows:
        lines.append(f"  {label:<28} {exact:<24} ~ {approx}")
    lines.append(f"  p0 = {sz.p0}, m0 = {sz.m0}, Pell (L0, K0) = ({rep.pell.l0}, {rep.pell.k0})")
    lines.append(f"  strict: eps(L;1) > {rep.steffens}  (N is not a square)")
    return "\n".join(lines) + "\n"


def _workers() -> int:
    raw = os.environ.get("SESHADRI_THREADS", "").strip()
    if not raw:
        return 1
    try:
        count = int(raw)
    except ValueError:
        raise UsageError(f"SESHADRI_THREADS must be an integer, got {raw!r}")
    if count < 0:
        raise UsageError(f"SESHADRI_THREADS must be >= 0, got {count}")
    return count or 1


def _ordered_map(fn, items: list) -> list:
    """``map`` that may fan out to processes; results stay in input order."""
    workers = _workers()
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{name} must be >= 1, got {value}")
    return value


def cmd_compute(args, out) -> int:
    n = _positive("N", args.n)
    r = _positive("--points", args.points)
    rep = full_report(n, r)
    if args.format == "json":
        out.write(dump_json(report_record(rep)))
    else:
        out.write(render_text(rep))
    return 0


def _table_row(item: tuple[int, int]) -> dict:
    n, r = item
    return report_record(full_report(n, r))


def cmd_table(args, out) -> int:
    lo = _positive("--from", args.lo)
    hi = args.hi
    if hi < lo:
        raise UsageError(f"empty range: --from {lo} --to {hi}")
    r = _positive("--points", args.points)
    records = _ordered_map(_table_row, [(n, r) for n in range(lo, hi + 1)])
    if args.format == "json":
        out.write(dump_json(records))
    else:
        out.write(render_csv(records))
    return 0


def _verify_one(item: tuple[int, int | None]):
    n, p_max = item
    chk = verify_lemma(n, p_max)
    return n, chk.passed, chk.witness(), str(chk.oracle.minimum)


def cmd_verify(args, out) -> int:
    if args.n is not None:
        if args.lo is not None or args.hi is not None:
            raise UsageError("give either N or --from/--to, not both")
        lo = hi = _positive("N", args.n)
    else:
        if args.lo is None or args.hi is None:
            raise UsageError("verify needs N or both --from and --to")
        lo, hi = _positive("--from", args.lo), args.hi
        if hi < lo:
            raise UsageError(f"empty range: --from {lo} --to {hi}")
    if args.pmax is not None:
        _positive("--pmax", args.pmax)

    skipped = [n for n in range(lo, hi + 1) if is_square(n)]
    todo = [(n, args.pmax) for n in range(lo, hi + 1) if not is_square(n)]
    results = _ordered_map(_verify_one, todo)
    failures = [(n, w) for n, ok, w, _ in results if not ok]
    passed = len(results) - len(failures)

    if args.format == "json":
        out.write(dump_json({
            "from": lo,
            "to": hi,
            "pmax": args.pmax,
            "checked": len(results),
            "passed": passed,
            "failed": len(failures),
            "skipped_squares": skipped,
            "first_failure": failures[0][1] if failures else None,
        }))
    else:
        for n in skipped:
            out.write(f"skipped N = {n}: perfect square (eps(L;1) = {isqrt(n)} exactly)\n")
        if lo == hi and results:
            out.write(f"N = {lo}: oracle minimum {results[0][3]}\n")
        out.write(f"verified {len(results)} degree(s): {passed} passed, {len(failures)} failed\n")
        if failures:
            out.write(f"first failure: {failures[0][1]}\n")
    return 1 if failures else 0


def cmd_pell(args, out) -> int:
    n = _positive("N", args.n)
    if n < 2 or is_square(n):
        raise UsageError(f"pell needs a non-square N >= 2, got {n}")
    cf = cf_expand(n)
    sol = pell_primitive(n)
    pairs = convergent_pairs(cf, 2 * cf.period_length)
    if args.format == "json":
        out.write(dump_json({
            "N": n,
            "a0": cf.a0,
            "period": list(cf.period),
            "period_length": cf.period_length,
            "convergents": [f"{h}/{k}" for h, k in pairs],
            "l0": sol.l0,
            "k0": sol.k0,
            "identity": sol.residual(),
        }))
        return 0
    out.write(f"sqrt({n}) = [{cf.a0}; ({', '.join(map(str, cf.period))})]\n")
    out.write(f"a0 = {cf.a0}, period length = {cf.period_length}\n")
    out.write("convergents: " + ", ".join(f"{h}/{k}" for h, k in pairs) + "\n")
    out.write(f"primitive solution (L0, K0) = ({sol.l0}, {sol.k0})\n")
    out.write(f"check: {sol.l0}^2 - {n}*{sol.k0}^2 = {sol.residual()}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seshadri",
        description="Exact bounds on Seshadri constants on Picard-number-1 surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="bound ladder for one degree N")
    p.add_argument("n", metavar="N", type=int)
    p.add_argument("--points", type=int, default=1, metavar="r")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="bound ladder for a range of degrees")
    p.add_argument("--from", dest="lo", type=int, required=True, metavar="A")
    p.add_argument("--to", dest="hi", type=int, required=True, metavar="B")
    p.add_argument("--points", type=int, default=1, metavar="r")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check the closed-form minimum against brute force")
    p.add_argument("n", metavar="N", type=int, nargs="?")
    p.add_argument("--from", dest="lo", type=int, metavar="A")
    p.add_argument("--to", dest="hi", type=int, metavar="B")
    p.add_argument("--pmax", type=int, metavar="P", help="search horizon (default max(50, 10*p0))")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pell", help="continued fraction of sqrt(N) and the Pell solution")
    p.add_argument("n", metavar="N", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_pell)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, SquareDegreeError, ValueError) as exc:
        print(f"seshadri: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
