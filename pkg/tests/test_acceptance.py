"""The ten acceptance criteria, one test each.

Every test appends a PASS/FAIL line that the terminal summary prints at the
end of the run (see ``conftest.py``).
"""
import functools
import json
import math
import time

import pytest

from conftest import ACCEPTANCE_LINES
from jordan_kit import constructions as C
from jordan_kit.analysis import jordan_constant, min_normal_abelian_index
from jordan_kit.bounds import collins_value, minkowski_bound, symmetric_lower_bound
from jordan_kit.cli import main
from jordan_kit.errors import NotTabulatedError
from jordan_kit.theorems import SUITES, check_zarhin_property, default_corpus, run_suite


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                ACCEPTANCE_LINES.append(f"FAIL  [{number:>2}] {title}: {type(exc).__name__}: {exc}")
                raise
            took = time.perf_counter() - t0
            ACCEPTANCE_LINES.append(f"PASS  [{number:>2}] {title} ({took:.2f}s){': ' + detail if detail else ''}")

        return inner

    return wrap


@criterion(1, "Minkowski table n=1..6")
def test_01_minkowski_table():
    minkowski_bound(1)  # warm the prime generator import
    t0 = time.perf_counter()
    values = [minkowski_bound(n).value for n in range(1, 7)]
    took = time.perf_counter() - t0
    assert values == [2, 24, 48, 5760, 11520, 2903040]
    assert took < 1e-3, f"{took * 1e3:.3f} ms"
    return f"{took * 1e6:.0f} us"


@criterion(2, "Collins table, rules and gap")
def test_02_collins_table():
    assert [collins_value(n).value for n in range(2, 7)] == [60, 360, 25920, 25920, 6531840]
    assert collins_value(20).value == 60**10 * math.factorial(10)
    assert collins_value(71).value == math.factorial(72)
    for n in range(7, 20):
        with pytest.raises(NotTabulatedError):
            collins_value(n)


@criterion(3, "(n+1)! below Collins for n=4,5,6")
def test_03_lower_bound_consistency():
    pairs = [(symmetric_lower_bound(n).value, collins_value(n).value) for n in (4, 5, 6)]
    assert pairs == [(120, 25920), (720, 25920), (5040, 6531840)]
    assert all(s <= c for s, c in pairs)


@criterion(4, "Jordan constants of abelian groups and Sym3..Sym6")
def test_04_jordan_oracle_values():
    for e in default_corpus():
        if e.group.is_abelian:
            assert jordan_constant(e.group).jordan_constant == 1, e.name
    for n, J in [(3, 2), (4, 6)]:
        assert jordan_constant(C.symmetric(n)).jordan_constant == J
    t0 = time.perf_counter()
    assert jordan_constant(C.symmetric(5)).jordan_constant == 120
    t5 = time.perf_counter() - t0
    t0 = time.perf_counter()
    assert jordan_constant(C.symmetric(6)).jordan_constant == 720
    t6 = time.perf_counter() - t0
    assert t5 <= 10 and t6 <= 120
    return f"Sym5 {t5:.2f}s, Sym6 {t6:.2f}s"


@criterion(5, "SL2(F5): J = 60 = collins(2), witness is the center")
def test_05_witness_realization():
    t0 = time.perf_counter()
    G = C.binary_icosahedral()
    r = jordan_constant(G)
    took = time.perf_counter() - t0
    assert r.jordan_constant == 60 == collins_value(2).value
    assert r.witness_abelian.order == 2 and r.witness_abelian == G.center()
    assert took <= 5
    return f"{took:.2f}s"


@criterion(6, "alpha(Alt_n) = n!/2 for n=5,6,7")
def test_06_alternating_alpha():
    times = []
    for n in (5, 6, 7):
        t0 = time.perf_counter()
        alpha, _ = min_normal_abelian_index(C.alternating(n))
        times.append(time.perf_counter() - t0)
        assert alpha == math.factorial(n) // 2
    assert times[-1] <= 60
    return f"Alt7 {times[-1]:.2f}s"


@criterion(7, "Zarhin groups for |K| <= 8")
def test_07_zarhin_suite():
    chains = [(2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4)]
    t0 = time.perf_counter()
    for f in chains:
        r = check_zarhin_property(f)
        n = math.prod(f)
        assert r.passed and r.computed["order"] == n**3 and r.computed["min_abelian_index"] >= n, f
    took = time.perf_counter() - t0
    assert took <= 600
    return f"{len(chains)} chains in {took:.2f}s"


@pytest.fixture(scope="module")
def corpus_records():
    return run_suite(default_corpus(), SUITES)


@criterion(8, "theorem suite on the default corpus")
def test_08_theorem_suite(corpus_records):
    live = [r for r in corpus_records if not r.skipped]
    failed = [r for r in live if not r.passed]
    assert not failed, failed[:3]
    assert all(r.recheck() for r in live)
    ids = {r.check_id for r in live}
    assert {"gs.subgroup", "gs.quotient", "gs.product", "gs.split", "extension", "centerless", "core"} <= ids
    return f"{len(live)} records passed, {len(corpus_records) - len(live)} skipped"


@criterion(9, "conjugate-intersection property on every (F, L, A)")
def test_09_conjugate_intersection(corpus_records):
    inter = [r for r in corpus_records if r.check_id == "extension.intersection"]
    assert inter and all(r.passed for r in inter)
    assert all(r.computed["index_L_M"] <= r.computed["index_bound"] for r in inter)
    return f"{len(inter)} instances"


@criterion(10, "analyze reports byte-identical across runs and job counts")
def test_10_determinism(tmp_path, capsys):
    reports = []
    for fam, n in [("symmetric", 5), ("binary_icosahedral", None)]:
        f = tmp_path / f"{fam}.group.json"
        args = ["construct", "--family", fam, "--out", str(f)] + (["--n", str(n)] if n else [])
        assert main(args) == 0
        runs = []
        for i, jobs in enumerate([1, 1, 2]):
            out = tmp_path / f"{fam}.{i}.json"
            assert main(["analyze", str(f), "--report", str(out), "--jobs", str(jobs)]) == 0
            runs.append(out.read_bytes())
        assert runs[0] == runs[1] == runs[2]
        reports.append(json.loads(runs[0]))
    capsys.readouterr()
    assert [r["jordan_constant"] for r in reports] == [120, 60]
