"""CLI surface: dispatch, determinism, exit codes."""

import json

import pytest

from orbit_atlas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_prime_field(capsys):
    code, out, _ = run(capsys, "classify", "--type", "A2",
                       "--point", "0,0,5", "--mod", "7")
    assert code == 0
    assert out.strip() == "x12"


def test_classify_zero_orbit(capsys):
    code, out, _ = run(capsys, "classify", "--type", "A1", "--point", "0")
    assert code == 0
    assert out.strip() == "0"


def test_classify_rational_point(capsys):
    code, out, _ = run(capsys, "classify", "--type", "A2",
                       "--point", "1/2,0,3")
    assert code == 0
    assert out.strip() == "x11"


def test_classify_bad_point_length(capsys):
    code, _, err = run(capsys, "classify", "--type", "A2", "--point", "1,2")
    assert code == 2
    assert "coordinates" in err


def test_bad_type_flag(capsys):
    code, _, err = run(capsys, "classify", "--type", "B2", "--point", "0")
    assert code == 2


def test_census_output(capsys):
    code, out, _ = run(capsys, "census", "--type", "A2", "--q", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "orbit_id,q,count"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 5
    assert sum(int(r[2]) for r in rows) == 27


def test_census_budget_refusal(capsys):
    code, _, err = run(capsys, "census", "--type", "A4", "--q", "7",
                       "--budget", "1000")
    assert code == 2
    assert "budget" in err


def test_output_determinism(capsys):
    first = run(capsys, "orbits", "--type", "A3", "--format", "json")
    second = run(capsys, "orbits", "--type", "A3", "--format", "json")
    assert first == second
    doc = json.loads(first[1])
    assert len(doc["orbits"]) == 16
    assert doc["validation"]["ok"] is True


def test_hasse_dot_file(tmp_path, capsys):
    target = tmp_path / "a2.dot"
    code, out, _ = run(capsys, "hasse", "--type", "A2", "--dot", str(target))
    assert code == 0
    text = target.read_text(encoding="utf-8")
    assert text.startswith("digraph closure_order {")
    assert text.count("->") == 5


def test_hasse_json(capsys):
    code, out, _ = run(capsys, "hasse", "--type", "A1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["covers"] == [["0", "x11"]]


def test_oracle_command(capsys):
    code, out, err = run(capsys, "oracle", "--type", "A1", "--q", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "class_id,q,count,orbit_id"
    assert len(lines) == 4   # three rational classes


def test_dims_command(capsys):
    code, out, _ = run(capsys, "dims", "--type", "A2")
    assert code == 0
    assert "MISMATCH" not in out


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all(w["status"] in ("VerifiedSymbolic", "VerifiedNumeric",
                               "RepairedAndVerified")
               for w in doc["witnesses"])


def test_check_all_rank1(capsys):
    code, out, _ = run(capsys, "check-all", "--type", "A1")
    assert code == 0
    assert out.count("PASS") == 7
    assert "FAIL" not in out
