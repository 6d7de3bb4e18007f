"""``qmwalk`` command line.

Exact values are printed as ``m/2^e`` first and a 12-digit decimal second.
Exit status: 0 on success, 1 on a failed cross-check or verification, 2 on
bad input or a capacity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import combinatorics as cb
from . import export
from . import qmeasure as qm
from .decoherence import MATRIX_CAP, decoherence_matrix
from .exact import CapacityError, Dyadic, InconsistencyError, gauss_pow_1pi
from .pathspace import y_vector, z_vector
from .verify import DEFAULT_SEED, SUITES, reports_json, run_suites


class CommandError(Exception):
    """Bad input on the command line; exit status 2."""


def _emit(text: str, out: str | None):
    if out:
        export.write_text(out, text)
    else:
        sys.stdout.write(text)


def _render(columns, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(columns, r)) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return buf.getvalue()
    cells = [list(map(str, columns))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _exact(d: Dyadic) -> dict:
    return {"exact": str(d), "decimal": str(d.to_decimal())}


def cmd_table(args) -> int:
    closed = [cb.quad_closed_form(n) for n in range(1, args.max_n + 1)]
    recur = cb.quad_table(args.max_n)
    diff = [(c, r) for c, r in zip(closed, recur) if c != r]
    if diff:
        for c, r in diff:
            print(f"n={c.n}: closed {c.as_tuple()} != recurrence {r.as_tuple()}", file=sys.stderr)
        return 1
    rows = [(q.n, q.s, q.t, q.u, q.v, str(q.quarter_power.to_fraction())) for q in closed]
    _emit(_render(export.QUAD_COLUMNS, rows, args.format), args.out)
    return 0


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise CommandError(f"bad index list {text!r}") from exc


def event_from_args(args) -> qm.Event:
    given = [x for x in (args.indices, args.mask, args.cyl) if x is not None]
    if len(given) != 1:
        raise CommandError("give exactly one of --indices, --mask, --cyl")
    if args.cyl is not None:
        literal = args.cyl.strip()
        if literal in ("0", "1"):
            # a lone symbol names the first step: "0" is the path 00
            literal = "0" + literal
        try:
            c = qm.CylinderEvent.from_prefix(literal)
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
        if args.refine is not None:
            if args.refine < c.base_level:
                raise CommandError(f"--refine {args.refine} is below the prefix level {c.base_level}")
            c = qm.refine(c, args.refine)
        return c.base
    if args.level is None:
        raise CommandError("--indices and --mask need --level")
    if args.level > qm.SCAN_CAP:
        raise CapacityError(f"level {args.level} exceeds scan cap {qm.SCAN_CAP}")
    try:
        if args.indices is not None:
            a = qm.Event.from_indices(args.level, _parse_indices(args.indices))
        else:
            a = qm.Event.from_mask(args.level, int(args.mask, 0))
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    if args.refine is not None:
        if args.refine < args.level:
            raise CommandError("--refine must not be below --level")
        a = qm.refine(qm.CylinderEvent(a), args.refine).base
    return a


def cmd_mu(args) -> int:
    a = event_from_args(args)
    result = {"level": a.level, "size": len(a)}
    routes = ["fast", "pairsum"] if args.route == "both" else [args.route]
    values = {}
    for r in routes:
        values[r] = qm.mu_fast(a) if r == "fast" else qm.mu_pairsum(a)
        result[r] = _exact(values[r])
    result["mu"] = result[routes[0]]["exact"]
    status = 0
    if len(values) == 2:
        result["agree"] = values["fast"] == values["pairsum"]
        status = 0 if result["agree"] else 1
    if args.format == "json":
        text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    else:
        cols = ["level", "size"] + [f"{r}_{k}" for r in routes for k in ("exact", "decimal")]
        row = [a.level, len(a)] + [result[r][k] for r in routes for k in ("exact", "decimal")]
        text = _render(cols, [row], args.format)
    _emit(text, args.out)
    return status


def cmd_complement(args) -> int:
    routes = ["closed", "rowsum", "brute"] if args.mode == "all" else [args.mode]
    if "brute" in routes and args.max_n > qm.SCAN_CAP:
        raise CapacityError(f"brute route capped at n={qm.SCAN_CAP}")
    if "rowsum" in routes and args.max_n > qm.SCAN_CAP:
        raise CapacityError(f"row-sum route capped at n={qm.SCAN_CAP}")
    fn = {
        "closed": qm.mu_complement_closed,
        "rowsum": qm.mu_complement_rowsum,
        "brute": lambda n: qm.mu_fast(qm.complement_event(n)),
    }
    cols = ["n"] + routes + ["decimal", "deviation", "agree"]
    if args.show_terms:
        cols.append("phase_sum")
    rows, status = [], 0
    for n in range(1, args.max_n + 1):
        vals = [fn[r](n) for r in routes]
        agree = all(v == vals[0] for v in vals)
        status |= not agree
        row = [n, *map(str, vals), str(vals[0].to_decimal()), str(vals[0] - 1), agree]
        if args.show_terms:
            row.append(qm.rowsum_phase_sum(n))
        rows.append(row)
    _emit(_render(cols, rows, args.format), args.out)
    return int(status)


def cmd_verify(args) -> int:
    reports = run_suites(args.suite, seed=args.seed, samples=args.samples, max_n=args.max_n)
    if args.format == "json":
        text = reports_json(reports, timing=args.timing) + "\n"
    else:
        text = "\n".join(r.summary() for r in reports) + "\n"
        for r in reports:
            for f in r.failures[:10]:
                text += f"  {r.suite}: {json.dumps(f, sort_keys=True)}\n"
    _emit(text, args.out)
    return 0 if all(r.ok for r in reports) else 1


def cmd_sums(args) -> int:
    lo = args.n if args.n is not None else 1
    hi = args.n if args.n is not None else args.max_n
    cols = ["n", "b0", "b1", "b2", "b3", "even", "odd", "alt_even", "alt_odd", "re(1+i)^n", "im(1+i)^n"]
    rows = []
    for n in range(lo, hi + 1):
        g = gauss_pow_1pi(n)
        rows.append([n, *(cb.binom_sum_mod4(n, j) for j in range(4)),
                     cb.spaced_sum_mod2(n, 0), cb.spaced_sum_mod2(n, 1),
                     *cb.alternating_sums(n), g.re, g.im])
    _emit(_render(cols, rows, args.format), args.out)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..")
            return int(a), int(b)
        return 1, int(text)
    except ValueError as exc:
        raise CommandError(f"bad range {text!r}; use A..B") from exc


def cmd_export(args) -> int:
    obj, fmt = args.object, args.format
    if obj == "dmatrix":
        if args.level is None:
            raise CommandError("dmatrix needs --level")
        if args.level > MATRIX_CAP:
            raise CapacityError(f"matrix export capped at level {MATRIX_CAP}")
        text = export.dump_matrix(decoherence_matrix(args.level))
    elif obj in ("zvec", "yvec"):
        if args.level is None:
            raise CommandError(f"{obj} needs --level")
        v = (z_vector if obj == "zvec" else y_vector)(args.level)
        if fmt == "json":
            text = json.dumps({"level": v.level, "values": v.tolist()}) + "\n"
        else:
            text = export.dump_bfile(v.tolist(), comment=f"{obj} level {v.level}")
    elif obj == "quad":
        lo, hi = _parse_range(args.range or "1..15")
        rows = [cb.quad_closed_form(n) for n in range(lo, hi + 1)]
        if fmt == "bfile":
            col = args.column or "s"
            text = export.dump_bfile([getattr(q, col) for q in rows], offset=lo, comment=f"{col}(n)")
        elif fmt == "json":
            text = json.dumps([{"n": q.n, "s": q.s, "t": q.t, "u": q.u, "v": q.v} for q in rows]) + "\n"
        else:
            text = export.dump_quad_csv(rows)
    elif obj == "mu-complement":
        lo, hi = _parse_range(args.range or "1..20")
        vals = [(n, qm.mu_complement_closed(n)) for n in range(lo, hi + 1)]
        if fmt == "json":
            text = json.dumps([{"n": n, **_exact(d)} for n, d in vals]) + "\n"
        else:
            text = export.dump_mu_csv(vals)
    else:  # pragma: no cover - argparse restricts choices
        raise CommandError(obj)
    _emit(text, args.out)
    return 0


def _event_flags(p):
    p.add_argument("--level", type=int)
    p.add_argument("--indices", help="comma separated path indices, e.g. 1,2,3")
    p.add_argument("--mask", help="membership bitmask, bit j = path j, e.g. 0xFFFE")
    p.add_argument("--cyl", help="path prefix of an elementary cylinder, e.g. 01101")
    p.add_argument("--refine", type=int, help="re-express the event at this level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, formats=("text", "csv", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write to this path instead of stdout")
        p.set_defaults(func=fn)
        return p

    p = add("table", cmd_table, "the s, t, u, v table with 2^(n-2)")
    p.add_argument("--max-n", type=int, default=15)

    p = add("mu", cmd_mu, "quantum measure of one event")
    _event_flags(p)
    p.add_argument("--route", choices=["fast", "pairsum", "both"], default="fast")

    p = add("complement", cmd_complement, "mu of the 'left site 0 by time n' event")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--mode", choices=["closed", "rowsum", "brute", "all"], default="all")
    p.add_argument("--show-terms", action="store_true", help="add the row-sum phase total")

    p = add("verify", cmd_verify, "run verification suites", formats=("text", "json"))
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, help="override random sample counts")
    p.add_argument("--max-n", type=int, help="override closed-form sweep range")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")

    p = add("sums", cmd_sums, "binomial sums and (1+i)^n")
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=15)

    p = add("export", cmd_export, "write a matrix, vector or sequence file",
            formats=("csv", "bfile", "json"))
    p.add_argument("object", choices=["dmatrix", "zvec", "yvec", "quad", "mu-complement"])
    p.add_argument("--level", type=int)
    p.add_argument("--range", help="n range A..B for quad / mu-complement")
    p.add_argument("--column", choices=["s", "t", "u", "v"], help="column for quad b-files")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_n", "level", "n"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            parser.error(f"--{name.replace('_', '-')} must be >= 1")
    try:
        return args.func(args)
    except (CommandError, CapacityError) as exc:
        print(f"qmwalk: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"qmwalk: internal check failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"qmwalk: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
