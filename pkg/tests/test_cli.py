import json
import subprocess
import sys

import pytest

from jordan_kit.cli import main


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_symmetric(tmp_path, capsys):
    out = tmp_path / "s5.group.json"
    code, text, _ = run(["construct", "--family", "symmetric", "--n", 5, "--out", out], capsys)
    assert code == 0 and "order 120" in text and "symmetric(5)" in text
    assert json.loads(out.read_text())["order"] == 120


def test_construct_zarhin(tmp_path, capsys):
    out = tmp_path / "q.group.json"
    code, text, _ = run(["construct", "--family", "zarhin", "--factors", "2,2", "--out", out], capsys)
    assert code == 0 and "order 64" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--family", "cyclic", "--n", "0", "--out", "x.json"],
        ["construct", "--family", "cyclic", "--n", "0"],
        ["construct", "--family", "zarhin", "--factors", "2,3", "--out", "x.json"],
        ["construct", "--family", "zarhin", "--out", "x.json"],
        ["construct", "--family", "nope", "--out", "x.json"],
        ["tables"],
        ["frobnicate"],
    ],
)
def test_bad_flags_exit_2(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2


def test_construct_cap_exit_3(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("JORDAN_KIT_CAP", "100")
    code, _, err = run(["construct", "--family", "symmetric", "--n", 5, "--out", tmp_path / "x.json"], capsys)
    assert code == 3 and "cap" in err


def test_analyze(tmp_path, capsys):
    f = tmp_path / "s4.group.json"
    run(["construct", "--family", "symmetric", "--n", 4, "--out", f], capsys)
    rep = tmp_path / "s4.report.json"
    code, text, _ = run(["analyze", f, "--report", rep], capsys)
    assert code == 0 and "J_G      6" in text and "b_G      24" in text
    doc = json.loads(rep.read_text())
    assert doc["jordan_constant"] == 6 and doc["witness_abelian"]["order"] == 4


def test_analyze_abelian_and_sl2(tmp_path, capsys):
    for fam, extra, J in [("abelian", ["--factors", "2,4"], 1), ("binary_icosahedral", [], 60)]:
        f = tmp_path / f"{fam}.group.json"
        run(["construct", "--family", fam, *extra, "--out", f], capsys)
        code, _, _ = run(["analyze", f, "--report", tmp_path / "r.json"], capsys)
        assert code == 0 and json.loads((tmp_path / "r.json").read_text())["jordan_constant"] == J


def test_analyze_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.group.json"
    bad.write_text("{}")
    assert run(["analyze", bad], capsys)[0] == 2
    assert run(["analyze", tmp_path / "missing.json"], capsys)[0] == 2


def test_analyze_cap(tmp_path, monkeypatch, capsys):
    f = tmp_path / "s5.group.json"
    run(["construct", "--family", "symmetric", "--n", 5, "--out", f], capsys)
    monkeypatch.setenv("JORDAN_KIT_CAP", "60")
    assert run(["analyze", f], capsys)[0] == 3


def test_analyze_deterministic(tmp_path, capsys):
    f = tmp_path / "sl.group.json"
    run(["construct", "--family", "symmetric", "--n", 4, "--emit", "cayley", "--out", f], capsys)
    reports = []
    for i, jobs in enumerate([1, 1, 2]):
        r = tmp_path / f"r{i}.json"
        run(["analyze", f, "--report", r, "--jobs", jobs], capsys)
        reports.append(r.read_bytes())
    assert reports[0] == reports[1] == reports[2]


def test_verify_zarhin(tmp_path, capsys):
    code, text, _ = run(["verify", "--suite", "zarhin", "--factors-max", 4, "--out", tmp_path], capsys)
    assert code == 0
    doc = json.loads((tmp_path / "zarhin.records.json").read_text())
    assert [r["inputs"][0] for r in doc["records"]] == ["zarhin(2)", "zarhin(2,2)", "zarhin(3)", "zarhin(4)"]
    assert all(r["passed"] for r in doc["records"])


def _corpus(tmp_path, capsys):
    d = tmp_path / "corpus"
    d.mkdir()
    run(["construct", "--family", "dihedral", "--n", 8, "--out", d / "d8.group.json"], capsys)
    run(["construct", "--family", "alternating", "--n", 4, "--emit", "cayley", "--out", d / "a4.group.json"], capsys)
    return d


def test_verify_corpus_dir(tmp_path, capsys):
    d = _corpus(tmp_path, capsys)
    out = tmp_path / "rec"
    code, text, _ = run(["verify", "--corpus", d, "--suite", "theorems", "--out", out], capsys)
    assert code == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == sorted(f"{c}.records.json" for c in ["centerless", "core", "extension", "extension.intersection", "gs.quotient", "gs.subgroup"])


def test_verify_direct_product_spec(tmp_path, capsys):
    d = tmp_path / "c"
    d.mkdir()
    spec = {
        "format": "jordan-kit/group", "version": 1, "kind": "spec", "family": "direct_product",
        "params": {"left": {"kind": "spec", "family": "symmetric", "params": {"n": 3}},
                   "right": {"kind": "spec", "family": "cyclic", "params": {"n": 2}}},
    }
    (d / "p.group.json").write_text(json.dumps(spec))
    code, _, _ = run(["verify", "--corpus", d, "--suite", "gs", "--out", tmp_path / "r"], capsys)
    assert code == 0 and (tmp_path / "r" / "gs.product.records.json").exists()


def test_verify_corrupt_corpus(tmp_path, capsys):
    d = _corpus(tmp_path, capsys)
    doc = json.loads((d / "a4.group.json").read_text())
    doc["table"][3] = doc["table"][4]
    (d / "a4.group.json").write_text(json.dumps(doc))
    assert run(["verify", "--corpus", d, "--out", tmp_path / "r"], capsys)[0] == 2


def test_verify_manifest_expectations(tmp_path, capsys):
    d = _corpus(tmp_path, capsys)
    m = {"format": "jordan-kit/manifest", "entries": [
        {"path": "d8.group.json", "summary": "dihedral(8)", "expect": {"jordan_constant": 2}},
        {"path": "a4.group.json", "expect": {"jordan_constant": 3}},
    ]}
    (d / "m.json").write_text(json.dumps(m))
    assert run(["verify", "--manifest", d / "m.json", "--suite", "core", "--out", tmp_path / "r"], capsys)[0] == 0
    m["entries"][1]["expect"]["jordan_constant"] = 4
    (d / "m.json").write_text(json.dumps(m))
    code, _, err = run(["verify", "--manifest", d / "m.json", "--suite", "core", "--out", tmp_path / "r"], capsys)
    assert code == 1 and "manifest.expect" in err


def test_tables_minkowski(capsys):
    code, text, _ = run(["tables", "--minkowski", "--max-n", 6], capsys)
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "   n    value  rule"
    assert [int(l.split()[1]) for l in lines[1:]] == [2, 24, 48, 5760, 11520, 2903040]
    assert lines[-1] == "   6  2903040  minkowski-product"


def test_tables_collins(capsys):
    code, text, _ = run(["tables", "--collins", "--n", 4], capsys)
    assert code == 0 and text.splitlines()[1] == "   4  25920  collins-small-n"
    code, text, _ = run(["tables", "--collins", "--n", 10], capsys)
    assert code == 0 and "not tabulated in source" in text
    assert run(["tables", "--collins", "--n", 10, "--strict"], capsys)[0] == 2
    assert run(["tables", "--collins", "--n", 10, "--min-n", 3], capsys)[0] == 2


def test_tables_json(capsys):
    code, text, _ = run(["tables", "--collins", "--min-n", 20, "--max-n", 21, "--format", "json"], capsys)
    rows = json.loads(text)
    assert rows[0]["value"] == str(60**10 * 3628800) and rows[0]["rule"] == "collins-60r"
    code, text, _ = run(["tables", "--symmetric", "--min-n", 3, "--max-n", 4, "--format", "json"], capsys)
    rows = json.loads(text)
    assert rows[0]["value"] is None and rows[1]["value"] == 120


def test_console_script(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "jordan_kit.cli", "tables", "--collins", "--n", "2"],
        capture_output=True, text=True, check=True,
    )
    assert "60" in out.stdout
