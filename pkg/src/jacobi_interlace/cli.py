"""Command-line interface.

Subcommands::

    table       recompute reference tables (T1..T11 or all)
    check       one interlacing check for a scenario and parameter set
    sweep       a grid of checks written as CSV
    identities  residuals of the mixed recurrence identities

Exit status: 0 when everything passes, 1 on a value mismatch or a failed
check, 2 on usage or regime errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from typing import Sequence

from . import config
from .errors import JacobiInterlaceError, RegimeError, TheoremViolation
from .identities import IDENTITIES, IDENTITY_IDS, verify_identity, worst_residual
from .interlace import InterlacingVerdict, Scenario, run_scenario
from .sweep import parse_range, run_sweep, write_csv
from .tables import (TABLE_CSV_HEADER, TableId, csv_rows, render_markdown, render_text,
                     run_table)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(default_format: str = "text") -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text", "csv", "markdown"),
                   default=default_format)
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--config", help="key=value file overriding tolerances and grid sizes")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jacobi-interlace",
                     description="Zeros, mixed recurrences and interlacing of Jacobi "
                                 "and Gegenbauer polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", parents=[_common()], help="recompute reference tables")
    t.add_argument("ids", nargs="*", default=["all"], metavar="ID",
                   help="table ids T1..T11, or 'all' (default)")

    scenarios = [s.value for s in Scenario]
    c = sub.add_parser("check", parents=[_common()], help="run one interlacing check")
    c.add_argument("--scenario", required=True, choices=scenarios)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--alpha", type=float)
    c.add_argument("--beta", type=float)
    c.add_argument("--lambda", dest="lam", type=float)

    s = sub.add_parser("sweep", parents=[_common("csv")], help="run a grid of checks (CSV)")
    s.add_argument("--scenario", required=True, choices=scenarios)
    s.add_argument("--n", required=True, help="lo:hi[:step] or comma list")
    s.add_argument("--alpha", help="lo:hi:step or comma list")
    s.add_argument("--beta", help="lo:hi:step or comma list")
    s.add_argument("--lambda", dest="lam", help="lo:hi:step or comma list")
    s.add_argument("--workers", type=int, default=1)

    i = sub.add_parser("identities", parents=[_common()], help="check the mixed recurrences")
    i.add_argument("--id", dest="ids", action="append", metavar="ID",
                   help=f"identity id (repeatable); default all of {', '.join(IDENTITY_IDS)}")
    i.add_argument("--trials", type=int, default=1000)
    i.add_argument("--seed", type=int, default=42)
    i.add_argument("--tol", type=float, default=None)
    i.add_argument("--n", help="fix n (single value, list or range)")
    i.add_argument("--alpha", help="fix alpha (single value, list or range)")
    i.add_argument("--beta", help="fix beta (single value, list or range)")
    i.add_argument("--lambda", dest="lam", help="fix lambda (single value, list or range)")
    i.add_argument("--x", help="fix x (single value, list or range)")
    return parser


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    def clean(o):
        if isinstance(o, float) and not math.isfinite(o):
            return None
        if isinstance(o, dict):
            return {k: clean(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [clean(v) for v in o]
        return o
    return json.dumps(clean(obj), indent=2)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_table(args) -> int:
    ids = list(TableId) if args.ids in (["all"], []) else [TableId(i.upper()) for i in args.ids]
    reports = [run_table(t) for t in ids]
    if args.format == "json":
        text = _json([r.to_dict() for r in reports])
    elif args.format == "csv":
        text = _csv(TABLE_CSV_HEADER, [row for r in reports for row in csv_rows(r)])
    elif args.format == "markdown":
        text = "\n\n".join(render_markdown(r) for r in reports)
    else:
        text = "\n\n".join(render_text(r) for r in reports)
        passed = sum(r.passed for r in reports)
        text += f"\n\n{passed}/{len(reports)} tables reproduced"
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _verdict_text(v: InterlacingVerdict) -> str:
    a, b = v.pair
    state = "degenerate" if v.degenerate else ("full" if v.full else "partial")
    lines = [f"{v.scenario.value}: {a.label()} vs {b.label()}: {state} interlacing"]
    for name, val in (v.critical.points().items() if v.critical else ()):
        lines.append(f"  {name} = {val:.6f}")
    for iv in v.breakdown_intervals:
        crit = f" contains {', '.join(iv.critical_inside)}" if iv.critical_inside else ""
        lines.append(f"  breakdown ({iv.lo:.6f}, {iv.hi:.6f}): {iv.zeros_inside} zeros{crit}")
    if v.classification:
        lines.append(f"  cases {', '.join(v.cases)}; primary {v.classification}")
    for k, val in v.stats.items():
        lines.append(f"  {k}: {val}")
    return "\n".join(lines)


def _cmd_check(args) -> int:
    v = run_scenario(args.scenario, args.n, args.alpha, args.beta, args.lam)
    if args.format == "json":
        text = _json(v.to_dict())
    elif args.format == "csv":
        from .sweep import CSV_HEADER, record_from_verdict
        rec = record_from_verdict(v, args.n, args.alpha, args.beta, args.lam)
        text = _csv(CSV_HEADER, [rec.csv_row()])
    elif args.format == "markdown":
        text = "```\n" + _verdict_text(v) + "\n```"
    else:
        text = _verdict_text(v)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    ns = parse_range(args.n, integer=True)
    alphas = parse_range(args.alpha)
    betas = parse_range(args.beta)
    lams = parse_range(args.lam)
    records, summary = run_sweep(args.scenario, ns, alphas, betas, lams, workers=args.workers)
    if args.format == "json":
        text = _json({"summary": summary.__dict__ | {"full_fraction": summary.full_fraction},
                      "records": [dict(zip(("scenario", "n", "alpha", "beta", "lambda"),
                                           (r.scenario, r.n, r.alpha, r.beta, r.lam)))
                                  | {"full": r.full, "breakdown": [list(b) for b in r.breakdown],
                                     "l_n": r.l_n, "r_n": r.r_n, "gamma": r.gamma, "k_n": r.k_n,
                                     "q_minus": r.q_minus, "q_plus": r.q_plus,
                                     "max_residual": r.max_residual} for r in records]})
        _emit(text, args.out)
    elif args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    # keep the summary out of a CSV written to stdout
    stream = sys.stdout if args.out else sys.stderr
    print(summary.line(args.scenario), file=stream)
    return EXIT_OK


def _identity_grid(args, ident: str):
    d = IDENTITIES[ident]
    names = [k for k in ("alpha", "beta", "lambda") if k in d.box]
    given = {"alpha": args.alpha, "beta": args.beta, "lambda": args.lam}
    ns = parse_range(args.n, integer=True) if args.n else [max(d.n_min, 3)]
    xs = parse_range(args.x) if args.x else [-0.7, -0.2, 0.3, 0.8]
    axes = [parse_range(given[k]) if given[k] else [0.5 * (d.box[k][0] + d.box[k][1])] for k in names]
    for n, *vals in itertools.product(ns, *axes):
        p = dict(zip(names, vals))
        for x in xs:
            yield n, p, x


def _cmd_identities(args) -> int:
    tol = config.get_settings().identity_tol if args.tol is None else args.tol
    if tol <= 0:
        raise RegimeError("--tol must be positive")
    ids = args.ids or list(IDENTITY_IDS)
    for i in ids:
        if i not in IDENTITIES:
            raise KeyError(f"unknown identity {i!r}; known: {', '.join(IDENTITY_IDS)}")
    grid_mode = any(v is not None for v in (args.n, args.alpha, args.beta, args.lam, args.x))
    rows = []
    for ident in ids:
        if grid_mode:
            worst, skipped, count = None, [], 0
            for n, p, x in _identity_grid(args, ident):
                try:
                    r = verify_identity(ident, n, p, x)
                except RegimeError as exc:
                    skipped.append(f"n={n} {p} x={x}: {exc}")
                    continue
                count += 1
                if worst is None or r.rel_residual > worst.rel_residual:
                    worst = r
        else:
            worst, skipped, count = worst_residual(ident, args.trials, args.seed), [], args.trials
        res = worst.rel_residual if worst else float("nan")
        rows.append({"id": ident, "points": count, "max_rel_residual": res,
                     "worst_point": ({"n": worst.n, **worst.params, "x": worst.x}
                                     if worst else None),
                     "passed": worst is not None and res <= tol,
                     "skipped": skipped, "description": IDENTITIES[ident].description})
    ok = all(r["passed"] for r in rows)
    if args.format == "json":
        text = _json({"tol": tol, "seed": args.seed, "trials": args.trials,
                      "passed": ok, "identities": rows})
    elif args.format == "csv":
        text = _csv(("id", "points", "max_rel_residual", "passed", "skipped"),
                    [(r["id"], r["points"], f"{r['max_rel_residual']:.3e}", r["passed"],
                      len(r["skipped"])) for r in rows])
    elif args.format == "markdown":
        text = "\n".join(["| id | points | max rel. residual | pass | skipped |",
                          "|---|---:|---:|---|---:|"] +
                         [f"| {r['id']} | {r['points']} | {r['max_rel_residual']:.2e} | "
                          f"{r['passed']} | {len(r['skipped'])} |" for r in rows])
    else:
        lines = []
        for r in rows:
            lines.append(f"{'PASS' if r['passed'] else 'FAIL'}  {r['id']:<6} "
                         f"max rel. residual {r['max_rel_residual']:.2e} over {r['points']} points"
                         f"  ({r['description']})")
            for s in r["skipped"]:
                lines.append(f"      skipped {s}")
        lines.append(f"{sum(r['passed'] for r in rows)}/{len(rows)} identities within {tol:g}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {"table": _cmd_table, "check": _cmd_check, "sweep": _cmd_sweep,
             "identities": _cmd_identities}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        overrides = config.load_config(args.config) if args.config else {}
        with config.using(**overrides):
            return _COMMANDS[args.command](args)
    except TheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (RegimeError, KeyError, ValueError, JacobiInterlaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
