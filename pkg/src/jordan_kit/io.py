"""JSON file formats: group files, analysis reports, check records, corpus manifests.

Output is canonical (sorted keys, compact separators, trailing newline) so that
identical content gives identical bytes. Integers above 2**53 - 1 are written
as decimal strings.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .analysis import AnalysisReport
from .constructions import FAMILY_PARAMS, GroupSpec, from_spec
from .errors import SpecError
from .group import FiniteGroup, SubgroupSet
from .theorems import CheckRecord

GROUP_FORMAT = "jordan-kit/group"
REPORT_FORMAT = "jordan-kit/report"
RECORDS_FORMAT = "jordan-kit/records"
MANIFEST_FORMAT = "jordan-kit/manifest"
VERSION = 1
MAX_SAFE_INT = 2**53 - 1


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def int_out(x: int) -> int | str:
    return x if -MAX_SAFE_INT <= x <= MAX_SAFE_INT else str(x)


def int_in(x: int | str) -> int:
    if isinstance(x, bool):
        raise ValueError("boolean is not an integer")
    return int(x)


# ---------------------------------------------------------------------------
# group files


def spec_to_json(spec: GroupSpec) -> dict:
    if spec.kind == "family":
        params = {}
        for k, v in spec.params.items():
            if isinstance(v, GroupSpec):
                params[k] = spec_to_json(v)
            elif isinstance(v, (list, tuple)):
                params[k] = list(v)
            else:
                params[k] = v
        return {"kind": "spec", "family": spec.family, "params": params}
    if spec.kind == "permutation":
        return {"kind": "permutation", "degree": spec.degree, "generators": [[list(c) for c in g] for g in spec.generators]}
    if spec.kind == "matrix":
        return {"kind": "matrix", "dim": spec.dim, "p": spec.p, "generators": [[list(r) for r in m] for m in spec.generators]}
    n = len(spec.table)
    return {"kind": "cayley", "order": n, "table": [int(x) for row in spec.table for x in row]}


def _require(obj: dict, key: str, where: str = ""):
    if key not in obj:
        raise SpecError(where + key, "missing")
    return obj[key]


def spec_from_json(obj: Any, where: str = "") -> GroupSpec:
    if not isinstance(obj, dict):
        raise SpecError(where or "<root>", "expected an object")
    kind = _require(obj, "kind", where)
    if kind == "spec":
        family = _require(obj, "family", where)
        if family not in FAMILY_PARAMS:
            raise SpecError(where + "family", f"unknown family {family!r}")
        raw = obj.get("params", {})
        if not isinstance(raw, dict):
            raise SpecError(where + "params", "expected an object")
        params: dict[str, Any] = {}
        for k, v in raw.items():
            if k in ("left", "right"):
                params[k] = spec_from_json(v, f"{where}params.{k}.")
            elif isinstance(v, list):
                params[k] = tuple(v)
            else:
                params[k] = v
        spec = GroupSpec("family", family, params)
    elif kind == "permutation":
        gens = _require(obj, "generators", where)
        try:
            gens = tuple(tuple(tuple(int(x) for x in cyc) for cyc in g) for g in gens)
        except (TypeError, ValueError):
            raise SpecError(where + "generators", "expected a list of cycle lists") from None
        spec = GroupSpec("permutation", degree=_require(obj, "degree", where), generators=gens)
    elif kind == "matrix":
        gens = _require(obj, "generators", where)
        try:
            gens = tuple(tuple(tuple(int(x) for x in r) for r in m) for m in gens)
        except (TypeError, ValueError):
            raise SpecError(where + "generators", "expected a list of matrices") from None
        spec = GroupSpec("matrix", dim=_require(obj, "dim", where), p=_require(obj, "p", where), generators=gens)
    elif kind == "cayley":
        n = _require(obj, "order", where)
        flat = _require(obj, "table", where)
        if not isinstance(n, int) or n < 1 or not isinstance(flat, list) or len(flat) != n * n:
            raise SpecError(where + "table", "expected order*order entries")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in flat):
            raise SpecError(where + "table", "entries must be integers")
        spec = GroupSpec("cayley", table=tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
    else:
        raise SpecError(where + "kind", f"unknown kind {kind!r}")
    spec.validate()
    return spec


def group_file_json(spec: GroupSpec, order: int) -> dict:
    out = spec_to_json(spec)
    out.update({"format": GROUP_FORMAT, "version": VERSION, "order": order})
    return out


def cayley_spec(G: FiniteGroup) -> GroupSpec:
    return GroupSpec("cayley", table=tuple(tuple(int(x) for x in row) for row in G.table))


def write_group(path: str | Path, spec: GroupSpec, G: FiniteGroup) -> None:
    Path(path).write_text(dumps(group_file_json(spec, G.order)), encoding="utf-8")


def parse_group_text(text: str, seed: int = 0) -> tuple[GroupSpec, FiniteGroup]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("<root>", f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SpecError("<root>", "expected an object")
    if obj.get("format") != GROUP_FORMAT:
        raise SpecError("format", f"expected {GROUP_FORMAT!r}")
    if obj.get("version") != VERSION:
        raise SpecError("version", f"unsupported version {obj.get('version')!r}")
    spec = spec_from_json(obj)
    if spec.kind == "cayley":
        import numpy as np

        try:
            G = FiniteGroup.from_table(np.array(spec.table, dtype=np.int64), seed=seed)
        except ValueError as exc:
            raise SpecError("table", str(exc)) from None
    else:
        G = from_spec(spec)
    if "order" in obj and obj["order"] != G.order:
        raise SpecError("order", f"file says {obj['order']}, construction gives {G.order}")
    return spec, G


def read_group(path: str | Path, seed: int = 0) -> tuple[GroupSpec, FiniteGroup]:
    return parse_group_text(Path(path).read_text(encoding="utf-8"), seed)


# ---------------------------------------------------------------------------
# reports and records


def _subgroup_json(S: SubgroupSet) -> dict:
    return {"order": S.order, "members": S.as_tuple()}


def report_json(report: AnalysisReport, group_summary: str) -> dict:
    """Report document; ``elapsed`` is left out so reruns give identical bytes."""
    return {
        "format": REPORT_FORMAT,
        "version": VERSION,
        "group": group_summary,
        "order": report.bound_constant,
        "jordan_constant": int_out(report.jordan_constant),
        "bound_constant": int_out(report.bound_constant),
        "witness_subgroup": _subgroup_json(report.witness_subgroup),
        "witness_abelian": _subgroup_json(report.witness_abelian),
        "subgroup_class_count": report.subgroup_class_count,
    }


def record_json(r: CheckRecord) -> dict:
    return {
        "check_id": r.check_id,
        "inputs": list(r.inputs),
        "computed": {k: int_out(v) for k, v in r.computed.items()},
        "relations": [list(rel) for rel in r.relations],
        "passed": r.passed,
        "skipped": r.skipped,
        "reason": r.reason,
        "witnesses": {k: list(v) for k, v in r.witnesses.items()},
    }


def record_from_json(obj: dict) -> CheckRecord:
    return CheckRecord(
        check_id=obj["check_id"],
        inputs=tuple(obj["inputs"]),
        computed={k: int_in(v) for k, v in obj["computed"].items()},
        relations=tuple((op, a, b) for op, a, b in obj["relations"]),
        passed=obj["passed"],
        skipped=obj["skipped"],
        reason=obj["reason"],
        witnesses={k: tuple(v) for k, v in obj["witnesses"].items()},
    )


def records_file_json(check_id: str, records: list[CheckRecord]) -> dict:
    return {
        "format": RECORDS_FORMAT,
        "version": VERSION,
        "check_id": check_id,
        "records": [record_json(r) for r in records],
    }


# ---------------------------------------------------------------------------
# manifests


def read_manifest(path: str | Path) -> list[dict]:
    """Entries ``{"path": ..., "summary": ..., "expect": {...}}`` with paths resolved against the manifest."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SpecError("<root>", f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or obj.get("format") != MANIFEST_FORMAT:
        raise SpecError("format", f"expected {MANIFEST_FORMAT!r}")
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise SpecError("entries", "expected a list")
    seen = set()
    out = []
    for i, e in enumerate(entries):
        if not isinstance(e, dict) or "path" not in e:
            raise SpecError(f"entries[{i}].path", "missing")
        if e["path"] in seen:
            raise SpecError(f"entries[{i}].path", f"duplicate path {e['path']!r}")
        seen.add(e["path"])
        out.append({"path": path.parent / e["path"], "summary": e.get("summary"), "expect": e.get("expect", {})})
    return out
