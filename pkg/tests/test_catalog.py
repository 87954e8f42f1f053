"""Catalog integrity: counts, round-trips, provenance layer, repairs."""

import json
from collections import Counter
from pathlib import Path

import pytest

from orbit_atlas.catalog import (ORBIT_COUNTS, load_catalog, serialize_catalog,
                                 validate_catalog, x_vars)
from orbit_atlas.errors import CatalogError

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "orbit_atlas" / "data"


def test_orbit_counts(catalogs):
    for n, count in ORBIT_COUNTS.items():
        assert len(catalogs[n].orbits) == count


def test_unique_regular_and_zero_orbit(catalogs):
    for n, cat in catalogs.items():
        empty_zero = [r for r in cat.orbits if not r.zero_set]
        empty_nonzero = [r for r in cat.orbits if not r.nonzero_set]
        assert len(empty_zero) == 1          # the regular orbit
        assert len(empty_nonzero) == 1       # the zero orbit
        assert empty_nonzero[0].id == "0"
        assert empty_zero[0].dim == max(r.dim for r in cat.orbits)


def test_dimension_histogram_rank4(catalogs):
    hist = Counter(r.dim for r in catalogs[4].orbits)
    assert dict(hist) == {0: 1, 1: 1, 2: 2, 3: 4, 4: 7, 5: 9, 6: 12,
                          7: 12, 8: 8, 9: 4, 10: 1}


def test_rank3_x22_record_contents(catalogs):
    rec = catalogs[3].by_id("x22")
    assert set(rec.zero_strs) == {"X11", "X33", "X22*X13 - X12*X23"}
    assert set(rec.nonzero_strs) == {"X22"}
    assert rec.dim == 3


def test_rank1_dimensions(catalogs):
    assert sorted(r.dim for r in catalogs[1].orbits) == [0, 1]


def test_round_trip_serialization_is_byte_identical(catalogs):
    for n, cat in catalogs.items():
        stored = (DATA_DIR / f"a{n}.json").read_text(encoding="utf-8")
        assert serialize_catalog(cat) == stored


def test_representatives_satisfy_own_conditions(catalogs):
    for n, cat in catalogs.items():
        report = validate_catalog(cat)
        assert all(r.representative_member for r in report.records)


def test_all_polynomials_homogeneous(catalogs):
    for n, cat in catalogs.items():
        report = validate_catalog(cat)
        assert all(r.homogeneous for r in report.records)


def test_no_variable_required_both_zero_and_nonzero(catalogs):
    for n, cat in catalogs.items():
        report = validate_catalog(cat)
        assert all(r.zv_sane for r in report.records)


def test_defining_sets_distinct_across_records(catalogs):
    for n, cat in catalogs.items():
        seen = set()
        for rec in cat.orbits:
            key = (frozenset(rec.zero_set), frozenset(rec.nonzero_set))
            assert key not in seen, rec.id
            seen.add(key)


def test_validation_flags_known_source_discrepancies(catalogs):
    report = validate_catalog(catalogs[4])
    status = {r.orbit_id: r.printed_set_status for r in report.records}
    # dimension-table/witness-table conflict: a coordinate printed in both
    # the closed and open conditions
    assert status["x44+x12+x13"] == "diff"
    # corrupted variable tokens in the printed tables
    assert status["x22+x13"] == "unparseable"
    assert status["x33+x24"] == "unparseable"
    assert status["x11+x44"] == "unparseable"
    # open condition printed with the wrong coordinate
    assert status["x33"] == "diff"
    # records transcribed faithfully must match their printed sets
    assert status["x22"] == "match"
    assert status["x11+x22+x33+x44"] == "match"


def test_unparseable_as_printed_word_is_recorded(catalogs):
    rec = catalogs[4].by_id("x22+x44")
    assert "genfrac" in rec.as_printed["word"]
    assert rec.witness_repairs()
    report = validate_catalog(catalogs[4])
    status = {r.orbit_id: r.printed_word_status for r in report.records}
    assert status["x22+x44"] == "unparseable"
    assert status["x11+x23+x34"] == "unparseable"
    assert status["x22"] == "parseable"


def test_rank2_validation_clean(catalogs):
    report = validate_catalog(catalogs[2])
    assert report.ok
    for r in report.records:
        assert r.printed_set_status in ("match", "absent")
        # no repairs anywhere in the rank-2 data
    assert not any(catalogs[2].by_id(r.orbit_id).witness_repairs()
                   for r in report.records)


def test_catalog_count_mismatch_detected(tmp_path, catalogs):
    doc = json.loads(serialize_catalog(catalogs[1]))
    doc["orbits"] = doc["orbits"][:1]
    path = tmp_path / "a1.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(CatalogError):
        load_catalog(1, path=str(path))


def test_catalog_duplicate_id_detected(tmp_path, catalogs):
    doc = json.loads(serialize_catalog(catalogs[1]))
    doc["orbits"].append(doc["orbits"][-1])
    path = tmp_path / "a1.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(CatalogError) as exc:
        load_catalog(1, path=str(path))
    assert "duplicate" in str(exc.value)


def test_catalog_parse_failure_names_offending_row(tmp_path, catalogs):
    doc = json.loads(serialize_catalog(catalogs[1]))
    doc["orbits"][1]["zero_set"] = ["X99 + ur"]
    path = tmp_path / "a1.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(CatalogError) as exc:
        load_catalog(1, path=str(path))
    assert "x11" in str(exc.value)


def test_env_override_data_dir(tmp_path, monkeypatch, catalogs):
    for n in (1,):
        (tmp_path / f"a{n}.json").write_text(serialize_catalog(catalogs[n]),
                                             encoding="utf-8")
    monkeypatch.setenv("ORBIT_ATLAS_DATA", str(tmp_path))
    cat = load_catalog(1)
    assert len(cat.orbits) == 2


def test_x_vars_order(catalogs):
    assert x_vars(4) == ["X11", "X22", "X33", "X44", "X12", "X23", "X34",
                         "X13", "X24", "X14"]
