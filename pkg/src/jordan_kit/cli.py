"""``jordan-kit`` command line.

Exit codes: 0 success, 1 a check failed, 2 input or format error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict
from pathlib import Path

from . import config
from .analysis import jordan_constant
from .bounds import collins_value, minkowski_bound, symmetric_lower_bound
from .constructions import FAMILY_PARAMS, GroupSpec, from_spec
from .errors import CapExceededError, JordanKitError, NotApplicableError, NotTabulatedError, SpecError
from .io import (
    cayley_spec,
    dumps,
    int_out,
    read_group,
    read_manifest,
    records_file_json,
    report_json,
    write_group,
)
from .theorems import SUITES, CheckRecord, CorpusEntry, _record, default_corpus, run_suite, run_zarhin_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

GAP_MARKER = "not tabulated in source"
NA_MARKER = "not applicable"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jordan-kit", description="Jordan constants and bounds for finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a group and write it to a group file")
    c.add_argument("--family", required=True, choices=sorted(k for k in FAMILY_PARAMS if k != "direct_product"))
    c.add_argument("--n", type=int, help="the family's integer parameter (degree or order)")
    c.add_argument("--factors", type=_ints, help="comma-separated factors for abelian/zarhin")
    c.add_argument("--out", required=True, type=Path)
    c.add_argument("--emit", choices=("spec", "cayley"), default="spec", help="file kind to write")

    a = sub.add_parser("analyze", help="compute J_G and b_G for a group file")
    a.add_argument("input", type=Path)
    a.add_argument("--report", type=Path, help="report file (default: <input>.report.json)")
    a.add_argument("--jobs", type=int, default=1)
    a.add_argument("--seed", type=int, default=config.DEFAULT_SEED)

    v = sub.add_parser("verify", help="run the theorem checks over a corpus")
    v.add_argument("--suite", default="all", choices=("all", "theorems", "zarhin") + SUITES)
    src = v.add_mutually_exclusive_group()
    src.add_argument("--corpus", type=Path, help="directory of *.group.json files")
    src.add_argument("--manifest", type=Path)
    v.add_argument("--factors-max", type=int, default=8, help="largest |K| for the zarhin suite")
    v.add_argument("--out", type=Path, default=Path("records"))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=config.DEFAULT_SEED)

    t = sub.add_parser("tables", help="print the closed-form bound tables")
    kind = t.add_mutually_exclusive_group(required=True)
    kind.add_argument("--minkowski", action="store_true")
    kind.add_argument("--collins", action="store_true")
    kind.add_argument("--symmetric", action="store_true")
    t.add_argument("--n", type=int)
    t.add_argument("--min-n", type=int)
    t.add_argument("--max-n", type=int)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.add_argument("--strict", action="store_true", help="exit 2 if a row has no value")
    return p


# ---------------------------------------------------------------------------


def _family_spec(args) -> GroupSpec:
    names = FAMILY_PARAMS[args.family]
    params = {}
    for key in names:
        if key == "factors":
            if args.factors is None:
                raise SpecError("factors", f"--factors is required for {args.family}")
            params[key] = tuple(args.factors)
        else:
            if args.n is None:
                raise SpecError(key, f"--n is required for {args.family}")
            params[key] = args.n
    return GroupSpec("family", args.family, params)


def cmd_construct(args) -> int:
    spec = _family_spec(args)
    G = from_spec(spec)
    written = spec if args.emit == "spec" else cayley_spec(G)
    write_group(args.out, written, G)
    print(f"order {G.order}  {spec.summary()}  -> {args.out}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    spec, G = read_group(args.input, seed=args.seed)
    report = jordan_constant(G, workers=args.jobs)
    out = args.report or args.input.with_name(args.input.name.removesuffix(".json") + ".report.json")
    Path(out).write_text(dumps(report_json(report, spec.summary())), encoding="utf-8")
    K, A = report.witness_subgroup, report.witness_abelian
    print(f"group    {spec.summary()}")
    print(f"J_G      {report.jordan_constant}")
    print(f"b_G      {report.bound_constant}")
    print(f"witness  K of order {K.order}, normal abelian A of order {A.order} (index {K.order // A.order})")
    print(f"classes  {report.subgroup_class_count}")
    print(f"elapsed  {report.elapsed:.3f}s")
    return EXIT_OK


def _corpus_from_files(paths, expectations, seed) -> tuple[list[CorpusEntry], list[CheckRecord]]:
    from .constructions import from_spec as build

    entries, expect_records = [], []
    for path, expect in zip(paths, expectations):
        spec, G = read_group(path, seed=seed)
        factors = None
        if spec.kind == "family" and spec.family == "direct_product":
            factors = (build(spec.params["left"]), build(spec.params["right"]))
        name = Path(path).name.removesuffix(".group.json")
        entries.append(CorpusEntry(name, G, factors=factors))
        if "jordan_constant" in expect:
            J = jordan_constant(G).jordan_constant
            expect_records.append(
                _record("manifest.expect", (name,), {"J_G": J, "expected": int(expect["jordan_constant"])}, [("==", "J_G", "expected")])
            )
    return entries, expect_records


def cmd_verify(args) -> int:
    records: list[CheckRecord] = []
    want = SUITES if args.suite in ("all", "theorems") else (() if args.suite == "zarhin" else (args.suite,))
    if want:
        if args.manifest is not None:
            entries = read_manifest(args.manifest)
            corpus, records = _corpus_from_files([e["path"] for e in entries], [e["expect"] for e in entries], args.seed)
        elif args.corpus is not None:
            if not args.corpus.is_dir():
                raise SpecError("corpus", f"{args.corpus} is not a directory")
            paths = sorted(args.corpus.glob("*.group.json"))
            corpus, _ = _corpus_from_files(paths, [{}] * len(paths), args.seed)
        else:
            corpus = default_corpus()
        records += run_suite(corpus, want, workers=args.jobs)
    if args.suite in ("all", "zarhin"):
        records += run_zarhin_suite(args.factors_max)
    records.sort(key=lambda r: r.sort_key)

    grouped: dict[str, list[CheckRecord]] = defaultdict(list)
    for r in records:
        grouped[r.check_id].append(r)
    args.out.mkdir(parents=True, exist_ok=True)
    for check_id, recs in sorted(grouped.items()):
        (args.out / f"{check_id}.records.json").write_text(dumps(records_file_json(check_id, recs)), encoding="utf-8")
    failed = [r for r in records if not r.skipped and not r.passed]
    for check_id, recs in sorted(grouped.items()):
        n_pass = sum(r.passed and not r.skipped for r in recs)
        n_skip = sum(r.skipped for r in recs)
        n_fail = len(recs) - n_pass - n_skip
        print(f"{check_id:<16} passed {n_pass:>6}  skipped {n_skip:>5}  failed {n_fail:>4}")
    for r in failed[:20]:
        print(f"FAILED {r.check_id} {' '.join(r.inputs)} {r.computed}", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


def table_rows(kind: str, ns) -> list[dict]:
    fn = {"minkowski": minkowski_bound, "collins": collins_value, "symmetric": symmetric_lower_bound}[kind]
    rows = []
    for n in ns:
        try:
            e = fn(n)
            rows.append({"n": n, "value": e.value, "rule": e.rule})
        except NotTabulatedError:
            rows.append({"n": n, "value": None, "rule": "collins-gap", "note": GAP_MARKER})
        except (NotApplicableError, ValueError):
            rows.append({"n": n, "value": None, "rule": "not-applicable", "note": NA_MARKER})
    return rows


def format_table(rows: list[dict]) -> str:
    """Fixed layout: ``n`` right-aligned in 4 columns, two spaces, value right-aligned
    to the widest entry (at least 5), two spaces, rule tag."""
    cells = [str(r["value"]) if r["value"] is not None else r["note"] for r in rows]
    w = max([5] + [len(c) for c in cells])
    lines = [f"{'n':>4}  {'value':>{w}}  rule"]
    for r, c in zip(rows, cells):
        lines.append(f"{r['n']:>4}  {c:>{w}}  {r['rule']}")
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> int:
    kind = "minkowski" if args.minkowski else "collins" if args.collins else "symmetric"
    if args.n is not None:
        if args.min_n is not None or args.max_n is not None:
            raise SpecError("n", "--n excludes --min-n/--max-n")
        ns = [args.n]
    else:
        lo = args.min_n if args.min_n is not None else {"minkowski": 1, "collins": 2, "symmetric": 4}[kind]
        hi = args.max_n if args.max_n is not None else lo
        ns = list(range(lo, hi + 1))
    if not ns or min(ns) < 1:
        raise SpecError("n", "range must be non-empty with n >= 1")
    rows = table_rows(kind, ns)
    if args.format == "json":
        sys.stdout.write(dumps([{**r, "value": int_out(r["value"]) if r["value"] is not None else None} for r in rows]))
    else:
        sys.stdout.write(format_table(rows))
    if args.strict and any(r["value"] is None for r in rows):
        return EXIT_INPUT
    return EXIT_OK


COMMANDS = {"construct": cmd_construct, "analyze": cmd_analyze, "verify": cmd_verify, "tables": cmd_tables}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CapExceededError as exc:
        print(f"jordan-kit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (JordanKitError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"jordan-kit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
