"""Command-line entry point: ``coho tables | invariant | langlands | verify``.

Exit codes: 0 all pass, 1 verification failures, 2 input or catalog errors,
3 precondition errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence

from . import report as rpt
from .invariants import INF, LimitError, PreconditionError, r_g, r_g_mu, r_prime
from .langlands import langlands_decompose
from .realform import CatalogError, CompactFormError, find_form, load_catalog, q0, restricted_root_system
from .rootsys import CartanType, ParabolicSubset, all_parabolics, build_root_system
from .verify import (ESTIMATE0_FORMS, FAIL, UNSUPPORTED, VerificationReport, check_interval_lemma,
                     check_lemma_half, check_lemma_half04, check_lemma_lhalf, check_lemma_lhalf6,
                     check_observation_rprime_ge_r, estimate0_sweep, reproduce_tables, supported_parabolics)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3
INVARIANTS = ("rprime", "rg", "q0", "rgmu")
TABLE_COLUMNS = ("form", "r_prime_computed", "r_prime_literature", "r_computed", "r_literature", "match")
TABLE_TITLES = {"table1": "Complex simple Lie algebras",
                "table2": "Noncompact noncomplex simple classical Lie algebras",
                "table3": "Noncompact noncomplex exceptional Lie algebras"}
# restricted rank cap for the bounded dichotomy sweep; rank 5 and up has 7^5+ candidates per pair
HALF04_MAX_RANK = 4
INTERVAL_MAX_RANK = 6


class UsageError(ValueError):
    pass


def parse_coords(text: str) -> List[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.strip("()[] ").split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse coordinates {text!r}: {exc}") from exc


def _form(cat, name: str):
    try:
        return find_form(cat, name)
    except KeyError:
        raise UsageError(f"unknown form {name!r}") from None


def _fmt(v) -> str:
    if v == INF:
        return "infinity"
    return str(v)


def _vec(v: Sequence) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# -- workers -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _catalog(data_dir: Optional[str]):
    return tuple(load_catalog(data_dir))


def _task(args):
    kind, data_dir, form_id, levi, bound, deep = args
    cat = _catalog(data_dir)
    if kind == "interval":
        t = CartanType(form_id[0], int(form_id[1:]))
        return [check_interval_lemma(build_root_system(t), ParabolicSubset(levi))]
    f = find_form(cat, form_id)
    s = ParabolicSubset(levi)
    if kind == "tables":
        return reproduce_tables([f], deep=deep)
    if kind == "half":
        return [check_lemma_half(f, s, sample_budget=1000)]
    if kind == "half04":
        return [check_lemma_half04(f, s, bound=bound)]
    if kind == "estimate0":
        return [estimate0_sweep(f, s, bound=bound)]
    raise ValueError(kind)


def run_tasks(tasks: Sequence[tuple], jobs: int) -> List[VerificationReport]:
    """Map over tasks; results come back in task order whatever the scheduling."""
    if jobs <= 1 or len(tasks) <= 1:
        results = [_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_task, tasks))
    return [r for batch in results for r in batch]


# -- suites --------------------------------------------------------------------

def suite_tables(cat, args) -> List[VerificationReport]:
    tasks = [("tables", args.data_dir, f.id, (), 0, args.deep) for f in cat
             if f.literature is not None and not f.is_compact]
    return run_tasks(tasks, args.jobs)


def interval_systems() -> List[str]:
    out = []
    for series, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4), ("E", 6), ("F", 4), ("G", 2)):
        for n in range(lo, INTERVAL_MAX_RANK + 1):
            if (series == "E" and n != 6) or (series == "F" and n != 4) or (series == "G" and n != 2):
                continue
            out.append(f"{series}{n}")
    return out


def suite_lemmas(cat, args) -> List[VerificationReport]:
    pairs = [(f, s) for f in cat if not f.is_compact for s in supported_parabolics(f)]
    half = [("half", args.data_dir, f.id, tuple(sorted(s.levi_indices)), 0, False) for f, s in pairs]
    half04 = [("half04", args.data_dir, f.id, tuple(sorted(s.levi_indices)), args.bound, False)
              for f, s in pairs if f.satake.dim_a0 <= HALF04_MAX_RANK]
    interval = [("interval", args.data_dir, t, tuple(sorted(s.levi_indices)), 0, False)
                for t in interval_systems() for s in all_parabolics(int(t[1:]))
                if len(s.levi_indices) == int(t[1:]) - 1]
    out = run_tasks(half, args.jobs)
    out.append(check_lemma_lhalf(cat, deep=args.deep))
    out += run_tasks(interval, args.jobs)
    out += run_tasks(half04, args.jobs)
    out += check_lemma_lhalf6(cat, deep=True)
    out.append(check_observation_rprime_ge_r(cat, deep=args.deep))
    return out


def suite_estimate0(cat, args) -> List[VerificationReport]:
    tasks = []
    for fid in ESTIMATE0_FORMS:
        f = find_form(cat, fid)
        for s in supported_parabolics(f):
            tasks.append(("estimate0", args.data_dir, f.id, tuple(sorted(s.levi_indices)), args.bound, False))
    return run_tasks(tasks, args.jobs)


SUITES = {"tables": [suite_tables], "lemmas": [suite_lemmas], "estimate0": [suite_estimate0],
          "all": [suite_tables, suite_lemmas, suite_estimate0]}


# -- commands ------------------------------------------------------------------

def table_rows(cat, deep: bool) -> dict:
    tables = {k: [] for k in TABLE_TITLES}
    for f in cat:
        lit = f.literature
        if lit is None or f.is_compact or lit.source.split(":")[0] not in tables:
            continue
        rp = r_prime(f).value
        try:
            rg = r_g(f, deep=deep).value
        except LimitError:
            rg = None
        ok_rp = lit.r_prime is None or rp == lit.r_prime
        if lit.r_g is not None and rg is None:
            match = "unsupported"
        else:
            match = "yes" if ok_rp and (lit.r_g is None or rg == lit.r_g) else "no"
        tables[lit.source.split(":")[0]].append({
            "form": f.id, "r_prime_computed": rp, "r_prime_literature": lit.r_prime,
            "r_computed": "limit (use --deep)" if rg is None else rg, "r_literature": lit.r_g, "match": match})
    return tables


def cmd_tables(cat, args, out) -> int:
    tables = table_rows(cat, args.deep)
    flat = [{"table": key, **row} for key, rows in tables.items() for row in rows]
    if args.format == "json-lines":
        for row in flat:
            out.write(rpt.dumps(rpt.row_record(row)) + "\n")
    elif args.format == "csv":
        out.write(rpt.csv_table(flat, ("table",) + TABLE_COLUMNS))
    else:
        for key, rows in tables.items():
            out.write(rpt.markdown_table(rows, TABLE_COLUMNS, TABLE_TITLES[key]) + "\n")
    bad = any(r["match"] == "no" for rows in tables.values() for r in rows)
    return EXIT_FAIL if bad else EXIT_OK


def _split_invariant_args(a: str, b: str):
    if a in INVARIANTS:
        return b, a
    if b in INVARIANTS:
        return a, b
    raise UsageError(f"expected one of {', '.join(INVARIANTS)} among {a!r}, {b!r}")


def cmd_invariant(cat, args, out) -> int:
    form_id, which = _split_invariant_args(args.first, args.second)
    f = _form(cat, form_id)
    witness = None
    if which == "rprime":
        v = r_prime(f)
        value, method, witness = v.value, v.method, v.witness
    elif which == "rg":
        v = r_g(f, deep=args.deep)
        value, method, witness = v.value, v.method, v.witness
    elif which == "q0":
        value, method = q0(f), "dimension_formula"
    else:
        if args.mu is None:
            raise UsageError("rgmu needs --mu=c1,c2,...")
        v = r_g_mu(f, parse_coords(args.mu))
        value, method, witness = v.value, v.method, v.witness
    if args.format == "json-lines":
        out.write(rpt.dumps(rpt.row_record({"form": f.id, "invariant": which, "value": value,
                                            "method": method, "witness": witness})) + "\n")
    else:
        out.write(f"{which}({f.id}) = {_fmt(value)}\n")
        out.write(f"method: {method}\n")
        if witness:
            out.write("witness: " + ", ".join(f"{k}={rpt.jsonable(v)}" for k, v in witness.items()) + "\n")
    return EXIT_OK


def cmd_langlands(cat, args, out) -> int:
    f = _form(cat, args.form)
    rs = restricted_root_system(f)
    nu = parse_coords(args.nu)
    if len(nu) != rs.rank:
        raise UsageError(f"nu needs {rs.rank} coordinates for {f.id}, got {len(nu)}")
    d = langlands_decompose(rs, nu)
    name = d.describe(rs.rank)
    if args.format == "json-lines":
        out.write(rpt.dumps(rpt.row_record({"form": f.id, "nu": nu, "parabolic": name,
                                            "levi": sorted(d.parabolic.levi_indices), "nu_plus": d.nu_plus,
                                            "cone_part": d.cone_part, "coefficients": d.coefficients})) + "\n")
    else:
        plus = "nu" if tuple(d.nu_plus) == tuple(nu) else _vec(d.nu_plus)
        out.write(f"P = {name}, nu_plus = {plus}\n")
        out.write(f"cone_part = {_vec(d.cone_part)}  (nu = nu_plus - cone_part)\n")
        out.write(f"coefficients = {_vec(d.coefficients)}\n")
    return EXIT_OK


def cmd_verify(cat, args, out) -> int:
    reports: List[VerificationReport] = []
    for suite in SUITES[args.suite]:
        batch = suite(cat, args)
        reports += batch
        if args.format == "json-lines":
            for r in batch:
                out.write(rpt.dumps(rpt.report_record(r)) + "\n")
            out.flush()
    if args.format == "csv":
        out.write(rpt.csv_table(rpt.report_rows(reports), rpt.REPORT_COLUMNS))
    elif args.format == "markdown":
        out.write(rpt.markdown_table(rpt.report_rows(reports), rpt.REPORT_COLUMNS, f"verify: {args.suite}"))
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"summary: {summary}", file=sys.stderr)
    if counts.get(UNSUPPORTED):
        print(f"{counts[UNSUPPORTED]} claims unsupported (not counted as failures)", file=sys.stderr)
    return EXIT_FAIL if counts.get(FAIL) else EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data-dir", default=os.environ.get("COHO_DATA_DIR"),
                        help="descriptor directory (default: $COHO_DATA_DIR or the bundled catalog)")
    common.add_argument("--format", choices=("markdown", "csv", "json-lines"), default="markdown")
    common.add_argument("--deep", action="store_true", help="lift the exhaustive rank limit for r_g")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    p = argparse.ArgumentParser(prog="coho", description="Vanishing-degree invariants of real simple Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("tables", parents=[common], help="reproduce the r' / r tables")
    inv = sub.add_parser("invariant", parents=[common], help="one invariant of one form")
    inv.add_argument("first", help="form id or invariant name")
    inv.add_argument("second", help="invariant name (rprime, rg, q0, rgmu) or form id")
    inv.add_argument("--mu", help="coordinates of mu in the fundamental-weight basis, e.g. 2 or 1,1")
    ll = sub.add_parser("langlands", parents=[common], help="Langlands cell of a restricted functional")
    ll.add_argument("form")
    ll.add_argument("--nu", required=True, help="restricted fundamental-weight coordinates, e.g. 1,-1/2")
    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("--suite", choices=tuple(SUITES), default="all")
    ver.add_argument("--bound", type=int, default=3, help="coefficient bound B for sweeps")
    return p


COMMANDS: dict = {"tables": cmd_tables, "invariant": cmd_invariant, "langlands": cmd_langlands,
                  "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "bound", 1) < 1:
        print("error: --bound must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        cat = _catalog(args.data_dir)
    except CatalogError as exc:
        print(f"error: catalog: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](cat, args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        extra = f" (coroot of root {list(exc.coroot)})" if exc.coroot is not None else ""
        print(f"error: precondition: {exc}{extra}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CompactFormError as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
