"""Command-line front end: ``grassmoduli {decompose,moduli,verify,dim}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .moduli import (
    ANTISYMMETRIC,
    SYMMETRIC,
    classify_components,
    equal_pq_report,
    moduli_report,
)
from .partitions import dim_gl, format_partition, parse_partition

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassmoduli",
        description="Decompose the square of F(k w_q) for SU(p+q) and compute dim V_k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pqk(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        sp.add_argument("--output", "-o", default="-", help="output file (default: stdout)")

    dec = sub.add_parser("decompose", help="irreducible summands of the tensor square")
    pqk(dec)
    dec.add_argument("--parity", choices=("sym", "alt", "both"), default="both")

    mod = sub.add_parser("moduli", help="dimension bookkeeping for V_k")
    pqk(mod)

    ver = sub.add_parser("verify", help="run the oracle invariant suites")
    ver.add_argument("--max-n", type=int, default=6)
    ver.add_argument("--max-k", type=int, default=3)
    ver.add_argument("--suite", action="append", default=None,
                     help="restrict to a suite (repeatable)")
    ver.add_argument("--output", "-o", default="-")

    dim = sub.add_parser("dim", help="dimension of V(lambda) for GL(n)")
    dim.add_argument("--n", type=int, required=True)
    dim.add_argument("--partition", required=True)
    dim.add_argument("--allow-zero", action="store_true",
                     help="print 0 instead of failing when lambda has more than n rows")
    dim.add_argument("--output", "-o", default="-")
    return parser


def _validate_pqk(args):
    if args.q < 1:
        raise UsageError(f"requires q ≥ 1 (got q={args.q})")
    if args.p < args.q:
        raise UsageError(f"requires p ≥ q (got p={args.p}, q={args.q})")
    if args.k < 0:
        raise UsageError(f"requires k ≥ 0 (got k={args.k})")


def _table(header, rows) -> str:
    cols = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _ints(xs) -> str:
    return ",".join(map(str, xs))


def render_decompose(p, q, k, fmt="table", parity="both") -> str:
    keep = {"sym": {SYMMETRIC}, "alt": {ANTISYMMETRIC}, "both": {SYMMETRIC, ANTISYMMETRIC}}[parity]
    comps = [c for c in classify_components(p, q, k) if c.parity in keep]
    if fmt == "json":
        return _dumps({"p": p, "q": q, "k": k, "components": [c.to_json() for c in comps]})
    header = ["partition", "fund", "i", "j", "parity", "dimension", "center_weight", "gs_filter"]
    if fmt == "csv":
        rows = [
            [format_partition(c.partition), _ints(c.component.fund.coeffs), _ints(c.component.i),
             _ints(c.component.j), c.parity, c.dimension, str(c.center_weight),
             "true" if c.passes_gs_filter else "false"]
            for c in comps
        ]
        return _csv(header, rows)
    rows = [
        [format_partition(c.partition), _ints(c.component.fund.coeffs), _ints(c.component.i),
         _ints(c.component.j), c.parity, c.dimension, c.center_weight,
         "yes" if c.passes_gs_filter else "no"]
        for c in comps
    ]
    return f"F({k} w_{q}) (x) F({k} w_{q}) for SU({p + q})\n" + _table(header, rows)


def render_moduli(p, q, k, fmt="table") -> str:
    if p == q:
        pq = equal_pq_report(q, k)
        rep, notes = pq.report, pq.notes
    else:
        rep = moduli_report(p, q, k)
        notes = rep.notes
    if fmt == "json":
        return rep.to_json(indent=2) + "\n"
    d = rep.to_dict()
    if fmt == "csv":
        scalars = [key for key in d if key not in ("gs_sym_components", "flags")]
        header = scalars + ["gs_sym_components"] + list(d["flags"])
        row = [d[key] for key in scalars]
        row.append(";".join(format_partition(x) for x in rep.gs_sym_components))
        row += ["true" if v else "false" for v in d["flags"].values()]
        return _csv(header, [row])
    rows = [[key, d[key]] for key in ("p", "q", "k", "dim_H0", "dim_sym_square", "dim_F2k",
                                      "dim_Vk", "N", "dim_image_moduli")]
    rows.append(["gs_sym_components", "; ".join(format_partition(x) for x in rep.gs_sym_components)])
    rows.append(["gs_v0v0_components", "; ".join(format_partition(x) for x in rep.gs_v0v0_components)])
    if rep.skew_fund is not None:
        rows.append(["skew_component_fund", str(rep.skew_fund)])
        rows.append(["skew_label_fund", str(rep.skew_label)])
    for name, v in rep.flags.items():
        rows.append([name, "true" if v else "false"])
    out = _table(["quantity", "value"], rows)
    if notes:
        out += "\nnotes:\n" + "".join(f"  - {n}\n" for n in notes)
    return out


def render_verify(result) -> str:
    lines = []
    for c in result.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"[{status}] {c.suite:<10} {c.name} ({c.cases} cases, {c.seconds:.2f}s)")
        for f in c.failures:
            lines.append(f"         {f}")
    if result.discrepancies:
        lines.append("")
        lines.append("discrepancies with the published statements (reported, not failures):")
        for d in result.discrepancies:
            mark = "oracle confirms computed" if d.oracle_confirms_computed else "ORACLE DISAGREES"
            lines.append(f"  {d.key:<14} {d.where}: published {d.published}; computed {d.computed} [{mark}]")
    lines.append("")
    lines.append("verify: " + ("all checks passed" if result.ok else "FAILED"))
    return "\n".join(lines) + "\n"


def _write(text: str, path: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "decompose":
            _validate_pqk(args)
            _write(render_decompose(args.p, args.q, args.k, args.format, args.parity), args.output)
        elif args.command == "moduli":
            _validate_pqk(args)
            _write(render_moduli(args.p, args.q, args.k, args.format), args.output)
        elif args.command == "verify":
            from .verify import SUITES, run_verify

            if args.max_n < 2:
                raise UsageError(f"invalid bound --max-n {args.max_n} (need ≥ 2)")
            if args.max_k < 0:
                raise UsageError(f"invalid bound --max-k {args.max_k} (need ≥ 0)")
            for s in args.suite or ():
                if s not in SUITES and s != "discrepancies":
                    raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}, discrepancies")
            result = run_verify(args.max_n, args.max_k, args.suite)
            _write(render_verify(result), args.output)
            return 0 if result.ok else 1
        elif args.command == "dim":
            if args.n < 1:
                raise UsageError(f"invalid rank --n {args.n}")
            try:
                lam = parse_partition(args.partition)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if len(lam) > args.n and not args.allow_zero:
                raise UsageError(f"partition {format_partition(lam)} has more than {args.n} rows")
            _write(f"{dim_gl(lam, args.n)}\n", args.output)
    except UsageError as exc:
        print(f"grassmoduli {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
