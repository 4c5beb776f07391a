import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan_kit import constructions as C
from jordan_kit.errors import SpecError
from jordan_kit.io import (
    cayley_spec,
    dumps,
    group_file_json,
    int_in,
    int_out,
    parse_group_text,
    read_manifest,
    record_from_json,
    record_json,
)
from jordan_kit.theorems import check_zarhin_property

SPECS = [
    C.GroupSpec("family", "symmetric", {"n": 4}),
    C.GroupSpec("family", "zarhin", {"factors": (2, 2)}),
    C.GroupSpec("family", "binary_icosahedral", {}),
    C.GroupSpec(
        "family",
        "direct_product",
        {"left": C.GroupSpec("family", "quaternion", {"order": 8}), "right": C.GroupSpec("family", "cyclic", {"n": 3})},
    ),
    C.GroupSpec("permutation", degree=5, generators=(((0, 1, 2),), ((2, 3, 4),))),
    C.GroupSpec("matrix", dim=2, p=5, generators=(((1, 1), (0, 1)), ((0, 4), (1, 0)))),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.summary())
def test_round_trip_byte_identical(spec):
    G = C.from_spec(spec)
    text = dumps(group_file_json(spec, G.order))
    spec2, G2 = parse_group_text(text)
    assert dumps(group_file_json(spec2, G2.order)) == text
    assert (G2.table == G.table).all()


def test_cayley_round_trip():
    G = C.dihedral(10)
    text = dumps(group_file_json(cayley_spec(G), G.order))
    spec, G2 = parse_group_text(text)
    assert spec.kind == "cayley" and (G2.table == G.table).all()
    assert dumps(group_file_json(spec, G2.order)) == text
    assert "." not in text  # no floats anywhere


def _cayley_doc(G):
    return json.loads(dumps(group_file_json(cayley_spec(G), G.order)))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(format="other"),
        lambda d: d.update(version=2),
        lambda d: d.update(kind="sphere"),
        lambda d: d["table"].pop(),
        lambda d: d["table"].__setitem__(5, d["table"][6]),
        lambda d: d["table"].__setitem__(0, 99),
        lambda d: d["table"].__setitem__(0, 1.5),
        lambda d: d.update(order=7),
    ],
)
def test_rejects_corrupt_files(mutate):
    d = _cayley_doc(C.cyclic(6))
    mutate(d)
    with pytest.raises(SpecError):
        parse_group_text(json.dumps(d))


def test_rejects_bad_json_and_spec_params():
    with pytest.raises(SpecError):
        parse_group_text("{not json")
    doc = {"format": "jordan-kit/group", "version": 1, "kind": "spec", "family": "cyclic", "params": {"n": "6"}}
    with pytest.raises(SpecError):
        parse_group_text(json.dumps(doc))


@given(st.integers(-(2**80), 2**80))
def test_big_ints_survive(x):
    y = int_out(x)
    if abs(x) > 2**53 - 1:
        assert isinstance(y, str)
    assert int_in(json.loads(json.dumps(y))) == x


def test_record_round_trip():
    r = check_zarhin_property((2,))
    assert record_from_json(json.loads(dumps(record_json(r)))) == r


def test_manifest(tmp_path):
    (tmp_path / "m.json").write_text(json.dumps({"format": "jordan-kit/manifest", "entries": [{"path": "a.json"}, {"path": "a.json"}]}))
    with pytest.raises(SpecError):
        read_manifest(tmp_path / "m.json")
    (tmp_path / "m.json").write_text(json.dumps({"format": "jordan-kit/manifest", "entries": [{"path": "a.json", "expect": {"jordan_constant": 1}}]}))
    [e] = read_manifest(tmp_path / "m.json")
    assert e["path"] == tmp_path / "a.json" and e["expect"] == {"jordan_constant": 1}
