import pytest

from jordan_kit import constructions as C
from jordan_kit.analysis import enumerate_normal_subgroups, enumerate_subgroup_classes
from jordan_kit.errors import CenterNotTrivialError
from jordan_kit.group import direct_product, semidirect_parts, semidirect_product
from jordan_kit.theorems import (
    SUITES,
    CheckRecord,
    CorpusEntry,
    check_centerless_bound,
    check_core_bound,
    check_extension_bound,
    check_gs_bounds,
    check_zarhin_property,
    default_corpus,
    intersection_records,
    run_suite,
    zarhin_chains,
)


def test_record_recheck():
    r = CheckRecord("x", ("a",), {"u": 3, "v": 5}, (("<=", "u", "v"),), True)
    assert r.recheck()
    bad = CheckRecord("x", ("a",), {"u": 6, "v": 5}, (("<=", "u", "v"),), True)
    assert not bad.recheck()


def test_gs_records(sym4):
    recs = check_gs_bounds(sym4, name="Sym4")
    assert {r.check_id for r in recs} == {"gs.subgroup"}
    assert all(r.passed for r in recs) and len(recs) == 11
    V = next(N for N in enumerate_normal_subgroups(sym4) if N.order == 4)
    q = check_gs_bounds(sym4, V, include_subgroups=False, name="Sym4")
    assert [r.check_id for r in q] == ["gs.quotient"] and q[0].passed
    H = next(c.representative for c in enumerate_subgroup_classes(sym4) if c.representative.order == 2)
    skipped = check_gs_bounds(sym4, H, include_subgroups=False, name="Sym4")
    assert skipped[0].skipped and skipped[0].reason


def test_gs_product_and_split():
    A, B = C.symmetric(3), C.cyclic(3)
    P = direct_product(A, B)
    recs = check_gs_bounds(P, factors=(A, B), include_subgroups=False)
    prod = [r for r in recs if r.check_id == "gs.product"]
    assert prod and prod[0].passed and prod[0].computed["J_G"] == 2
    N, H = C.cyclic(3), C.cyclic(2)
    S = semidirect_product(N, H, [[0, 1, 2], [0, 2, 1]])
    recs = check_gs_bounds(S, split=semidirect_parts(N, H, S), include_subgroups=False)
    split = [r for r in recs if r.check_id == "gs.split"]
    assert split and split[0].passed


def test_extension_and_intersection(sym4):
    for H in enumerate_normal_subgroups(sym4):
        r = check_extension_bound(sym4, H)
        assert r.passed and r.computed["slack"] >= 0
        ks = intersection_records(sym4, H)
        assert len(ks) == 11 and all(k.passed for k in ks)


def test_centerless(sym4):
    A4 = next(N for N in enumerate_normal_subgroups(sym4) if N.order == 12)
    r = check_centerless_bound(sym4, A4)
    assert r.passed and r.computed["aut_H"] == 24
    with pytest.raises(CenterNotTrivialError):
        check_centerless_bound(C.quaternion(8), C.quaternion(8).whole())


def test_core(sym4):
    for c in enumerate_subgroup_classes(sym4):
        r = check_core_bound(sym4, c.representative)
        assert r.passed and r.computed["N_in_Q"] == 1


def test_zarhin_chains():
    chains = [p.invariant_factors for p in zarhin_chains(8)]
    assert chains == [(2,), (3,), (2, 2), (4,), (5,), (6,), (7,), (2, 2, 2), (2, 4), (8,)]
    assert [p.invariant_factors for p in zarhin_chains(4)] == [(2,), (3,), (2, 2), (4,)]
    r = check_zarhin_property((2, 2))
    assert r.passed and r.computed["order"] == 64 and r.computed["min_abelian_index"] >= 4


def test_default_corpus_contents():
    names = {e.name for e in default_corpus()}
    assert {"Sym4", "Sym5", "Alt5", "SL2(F5)", "C3:C2", "D8xD8"} <= names
    assert all(e.group.order <= 120 for e in default_corpus())


def test_run_suite_parallel_deterministic():
    corpus = [CorpusEntry("Sym3", C.symmetric(3)), CorpusEntry("D8", C.dihedral(8)), CorpusEntry("Q8", C.quaternion(8))]
    a = run_suite(corpus, SUITES, workers=1)
    b = run_suite(corpus, SUITES, workers=2)
    assert [(r.check_id, r.inputs, r.computed, r.passed) for r in a] == [(r.check_id, r.inputs, r.computed, r.passed) for r in b]
    assert all(r.passed for r in a if not r.skipped)
    assert all(r.recheck() == r.passed for r in a)
