"""Command-line interface.

Subcommands: orbits, classify, census, oracle, dims, hasse, verify,
check-all.  Machine formats (JSON/CSV/DOT) are the primary outputs; human
tables are renderings of the same data.  Exit codes: 0 success, 1 a check
failed (first counterexample printed), 2 flag errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import catalog as catalog_mod
from .arith import Fp, is_prime
from .catalog import load_catalog, record_to_json, validate_catalog
from .classify import CENSUS_BUDGET, classify, partition_census
from .errors import (BudgetExceededError, CatalogError, DisjointnessError,
                     ExhaustionError, SchemaError, UnsupportedRankError)
from .lie import NilElement, nil_dim
from .oracle import (BFS_BUDGET, enumerate_borel_orbits, jacobian_rank_dim,
                     refine_check, stability_check)
from .order import emit_dot, hasse, poset_json
from .witness import verify_rank

ORACLE_DEFAULT_QS = {1: (2, 3, 5, 7), 2: (2, 3, 5, 7), 3: (2, 3, 5, 7),
                     4: (2, 3)}
CENSUS_DEFAULT_QS = {1: (3, 5, 7, 11), 2: (3, 5, 7, 11), 3: (3, 5, 7, 11),
                     4: (3, 5)}


def _rank(args) -> int:
    t = args.type.upper()
    if t in ("A1", "A2", "A3", "A4"):
        return int(t[1])
    raise UnsupportedRankError(f"--type must be A1|A2|A3|A4, got {args.type}")


def _parse_point(text: str, n: int, mod: int | None) -> NilElement:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != nil_dim(n):
        raise SchemaError(
            f"point needs {nil_dim(n)} comma-separated coordinates")
    if mod is not None:
        vals = [Fp(int(p), mod) for p in parts]
    else:
        vals = [Fraction(p) for p in parts]
    return NilElement.from_vector(n, vals)


def cmd_orbits(args) -> int:
    n = _rank(args)
    cat = load_catalog(n)
    report = validate_catalog(cat)
    if args.format == "json":
        doc = {"type": f"A{n}", "schema_version": cat.schema_version,
               "orbits": [record_to_json(r) for r in cat.orbits],
               "validation": {
                   "ok": report.ok,
                   "records": [{
                       "id": r.orbit_id,
                       "representative_member": r.representative_member,
                       "homogeneous": r.homogeneous,
                       "zv_sane": r.zv_sane,
                       "printed_set_status": r.printed_set_status,
                       "printed_word_status": r.printed_word_status,
                       "notes": r.notes,
                   } for r in report.records]}}
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(f"{'id':<24} {'dim':>3}  {'#Z':>2} {'#V':>2}  defining set")
        for rec in cat.orbits:
            zs = ", ".join(rec.zero_strs)
            vs = ", ".join(rec.nonzero_strs)
            print(f"{rec.id:<24} {rec.dim:>3}  {len(rec.zero_set):>2} "
                  f"{len(rec.nonzero_set):>2}  Z({zs}) & V({vs})")
    return 0 if report.ok else 1


def cmd_classify(args) -> int:
    n = _rank(args)
    if args.mod is not None and not is_prime(args.mod):
        raise SchemaError(f"--mod {args.mod} is not prime")
    m = _parse_point(args.point, n, args.mod)
    result = classify(n, m)
    print(result.orbit_id)
    return 0


def cmd_census(args) -> int:
    n = _rank(args)
    qs = [args.q] if args.q else list(CENSUS_DEFAULT_QS[n])
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["orbit_id", "q", "count"])
    ok = True
    for q in qs:
        counts = partition_census(n, q, budget=args.budget)
        for rid, cnt in counts.items():
            writer.writerow([rid, q, cnt])
        nonempty = sum(1 for v in counts.values() if v)
        expected = catalog_mod.ORBIT_COUNTS[n]
        if q > 2 and nonempty != expected:
            print(f"# FAIL: rank {n} q={q}: {nonempty} nonempty classes, "
                  f"expected {expected}", file=sys.stderr)
            ok = False
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    n = _rank(args)
    qs = [args.q] if args.q else list(ORACLE_DEFAULT_QS[n])
    ok = True
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["class_id", "q", "count", "orbit_id"])
    for q in qs:
        part = enumerate_borel_orbits(n, q, budget=args.budget)
        stability_check(part)
        report = refine_check(n, q, partition=part)
        class_to_record = {}
        for rid, classes in report.classes_per_record.items():
            for cls in classes:
                class_to_record[cls] = rid
        for cls in range(part.class_count):
            writer.writerow([cls, q, part.sizes[cls],
                             class_to_record.get(cls, "")])
        if not report.ok:
            for v in report.violations:
                print(f"# FAIL q={q}: {v}", file=sys.stderr)
            ok = False
        if report.empty_records:
            print(f"# note q={q}: empty over F_{q}: {report.empty_records}",
                  file=sys.stderr)
    return 0 if ok else 1


def cmd_dims(args) -> int:
    n = _rank(args)
    cat = load_catalog(n)
    ok = True
    print(f"{'id':<24} {'catalog':>7} {'jacobian':>8}")
    for rec in cat.orbits:
        dim = jacobian_rank_dim(rec)
        mark = "" if dim == rec.dim else "  MISMATCH"
        if dim != rec.dim:
            ok = False
        print(f"{rec.id:<24} {rec.dim:>7} {dim:>8}{mark}")
    return 0 if ok else 1


def cmd_hasse(args) -> int:
    n = _rank(args)
    poset = hasse(n)
    dot = emit_dot(poset)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dot)
        print(f"wrote {args.dot}")
    if args.format == "json":
        print(json.dumps(poset_json(poset), indent=2))
    elif not args.dot:
        sys.stdout.write(dot)
    return 0


def cmd_verify(args) -> int:
    n = _rank(args)
    cat = load_catalog(n)
    report = verify_rank(cat)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.summary_table())
    bad_forward = [f for f in report.forward if not f.ok]
    for f in bad_forward:
        print(f"# FAIL forward containment {f.orbit_id}: {f.detail}",
              file=sys.stderr)
    bad = [v for v in report.verdicts if not v.certified]
    for v in bad:
        print(f"# FAIL witness {v.orbit_id}: {v.status} {v.detail}",
              file=sys.stderr)
    return 0 if not bad and not bad_forward else 1


def cmd_check_all(args) -> int:
    n = _rank(args)
    cat = load_catalog(n)
    failures = []

    def check(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:            # noqa: BLE001 - report and fail
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        print(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}")
        if not ok:
            failures.append(name)

    def catalog_check():
        report = validate_catalog(cat)
        return report.ok, f"{len(cat.orbits)} records"

    def census_check():
        expected = catalog_mod.ORBIT_COUNTS[n]
        seen = []
        for q in CENSUS_DEFAULT_QS[n]:
            counts = partition_census(n, q, budget=args.budget)
            nonempty = sum(1 for v in counts.values() if v)
            seen.append(f"q={q}:{nonempty}")
            if nonempty != expected:
                return False, f"q={q} gave {nonempty} != {expected}"
        return True, " ".join(seen)

    def rep_check():
        for rec in cat.orbits:
            if classify(n, rec.representative, cat).orbit_id != rec.id:
                return False, rec.id
        return True, f"{len(cat.orbits)} representatives"

    def dims_check():
        for rec in cat.orbits:
            if jacobian_rank_dim(rec) != rec.dim:
                return False, rec.id
        return True, f"{len(cat.orbits)} dimensions"

    def oracle_check():
        notes = []
        for q in ORACLE_DEFAULT_QS[n]:
            part = enumerate_borel_orbits(n, q, budget=args.budget)
            stability_check(part)
            report = refine_check(n, q, partition=part)
            if not report.ok:
                return False, report.violations[0]
            notes.append(f"q={q}:{part.class_count}cls")
        return True, " ".join(notes)

    def order_check():
        poset = hasse(n)
        return True, f"{len(poset.covers)} cover edges"

    def witness_check():
        report = verify_rank(cat)
        if not report.all_certified:
            bad = [v.orbit_id for v in report.verdicts if not v.certified]
            return False, f"uncertified: {bad}"
        return True, f"{len(report.verdicts)} witnesses certified"

    check("catalog", catalog_check)
    check("census", census_check)
    check("representatives", rep_check)
    check("dimensions", dims_check)
    check("oracle", oracle_check)
    check("closure-order", order_check)
    check("witnesses", witness_check)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="orbit-atlas",
        description="Exact classification data and verification tools for "
                    "Borel-orbit decompositions of nilradicals, types A1-A4.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, budget_default):
        p.add_argument("--type", required=True, help="A1|A2|A3|A4")
        p.add_argument("--budget", type=int, default=budget_default,
                       help="point-count ceiling for enumerations")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap (results are thread-count independent)")

    p = sub.add_parser("orbits", help="dump the catalog with validation")
    common(p, CENSUS_BUDGET)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("classify", help="classify one point")
    common(p, CENSUS_BUDGET)
    p.add_argument("--point", required=True,
                   help="comma-separated coordinates in canonical root order")
    p.add_argument("--mod", type=int, default=None,
                   help="prime field (default: rationals)")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("census", help="per-orbit point counts over F_q")
    common(p, CENSUS_BUDGET)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("oracle", help="BFS orbit enumeration and refinement")
    common(p, BFS_BUDGET)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("dims", help="Jacobian dimension audit")
    common(p, CENSUS_BUDGET)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("hasse", help="closure order and DOT diagram")
    common(p, CENSUS_BUDGET)
    p.add_argument("--dot", default=None, help="write DOT to this file")
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("verify", help="forward containment and witnesses")
    common(p, CENSUS_BUDGET)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("check-all", help="run every acceptance suite")
    common(p, CENSUS_BUDGET)
    p.set_defaults(fn=cmd_check_all)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UnsupportedRankError, SchemaError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ExhaustionError, DisjointnessError, CatalogError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
