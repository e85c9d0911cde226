"""End-to-end checks of the python package against the compiled core."""

import json
from pathlib import Path

import jsonschema
import pytest

import hamvc

SCHEMA_DIR = Path(__file__).resolve().parents[2] / "schemas"


def schema(name):
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())


def test_exports_present():
    assert hamvc.__version__ == "0.1.0"
    for name in hamvc.__all__:
        assert hasattr(hamvc, name), name
    assert len(hamvc.CLAIM_IDS) == 10


def test_full_grid_dimension_and_witness():
    u = hamvc.PointSet.full(2, 4)
    assert len(u) == 16
    assert (u.d, u.q, u.t) == (2, 4, 1)
    r = hamvc.vc_dimension(u)
    jsonschema.validate(r, schema("vcresult"))
    assert r["dimension"] == 3
    assert r["refuted_at"] == 4
    assert [tuple(p) for p in r["witness"]["W"]] == [(0, 0), (0, 1), (0, 2)]
    assert len(r["witness"]["assignments"]) == 8
    ok, diagnostic = hamvc.validate_witness(r["witness"], u)
    assert ok, diagnostic


def test_witness_rejected_on_smaller_set():
    u = hamvc.PointSet.full(2, 4)
    witness = hamvc.vc_dimension(u)["witness"]
    trimmed = hamvc.PointSet(2, 4, 1, [[0, 0], [0, 1], [0, 2]])
    ok, diagnostic = hamvc.validate_witness(witness, trimmed)
    assert not ok
    assert diagnostic


def test_empty_set_dimension():
    u = hamvc.PointSet(2, 3, 1, [])
    r = hamvc.vc_dimension(u)
    assert r["dimension"] == -1
    assert r["witness"] is None


def test_text_round_trip_and_parse_error():
    u = hamvc.construct("u1", 4)
    assert len(u) == 8
    again = hamvc.parse_point_set(hamvc.to_text(u, "u1 q=4"))
    assert again == u
    with pytest.raises(hamvc.PointSetParseError):
        hamvc.parse_point_set("2 4\n0 0\n")


def test_band3_small_q_warns():
    with pytest.warns(UserWarning):
        hamvc.construct("band3", 4)


def test_detect_hit_and_miss():
    u = hamvc.PointSet(2, 3, 1, [[0, 0], [0, 1], [0, 2], [1, 2]])
    hit = hamvc.detect("line-triple", u, emit_witness=True)
    jsonschema.validate(hit, schema("configuration"))
    assert hit["kind"] == "LineTriple"
    assert hit["roles"]["x"] == [0, 0]
    assert hit["roles"]["u0"] == [1, 2]
    ok, diagnostic = hamvc.validate_witness(hit["witness"], u)
    assert ok, diagnostic

    u2 = hamvc.construct("u2", 4)
    assert len(u2) == 12
    assert hamvc.detect("four-on-a-line", u2) is None


def test_detect_unknown_kind():
    u = hamvc.PointSet.full(2, 3)
    with pytest.raises(ValueError):
        hamvc.detect("pentagon", u)


def test_pigeonhole_slice():
    u3 = hamvc.construct("u3", 4)
    assert len(u3) == 20
    hit = hamvc.pigeonhole_slice(u3, 8)
    assert hit is not None
    assert hit["slice_vc"]["dimension"] == 1
    assert hamvc.pigeonhole_slice(u3, 9) is None


def test_verify_suite():
    out = hamvc.verify("T1.2", q=3, seed=7)
    jsonschema.validate(out, schema("report"))
    assert out["exit_code"] == 0
    assert [r["mode"] for r in out["reports"]] == ["exhaustive", "constructive"]
    assert all(r["outcome"] == "verified" for r in out["reports"])
    assert out["reports"][0]["work"] == 84


def test_threshold():
    out = hamvc.threshold(q=3, k=2)
    jsonschema.validate(out, schema("threshold"))
    assert out["m_star"] == 6
    assert len(out["certificate"]) == 5
    assert out["work"] == 345


def test_threshold_infeasible_maps_to_runtime_error():
    with pytest.raises(hamvc.InfeasibleError):
        hamvc.threshold(q=9, k=3)
