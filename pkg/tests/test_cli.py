"""CLI behavior: formats, exit codes, diagnostics."""

import json

import pytest

from wmfposets.cli import main, parse_colors, parse_weight_spec
from wmfposets.root_system import RootSystemError, SimpleType


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_weight_spec():
    spec = parse_weight_spec("C3:0,0,1xA2:1,0")
    assert spec == ((SimpleType("C", 3), (0, 0, 1)),
                    (SimpleType("A", 2), (1, 0)))
    for bad in ["C3", "C3:1,2", "C3:a,b,c", "Z9:1"]:
        with pytest.raises(RootSystemError):
            parse_weight_spec(bad)


def test_parse_colors():
    assert parse_colors("0,2") == (0, 2)
    with pytest.raises(RootSystemError):
        parse_colors("1,x")


def test_roots_text(capsys):
    code, out, _ = run(capsys, "roots", "G2")
    assert code == 0
    assert "h = 6, h* = 4" in out


def test_roots_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "roots", "B2")
    assert code == 0
    obj = json.loads(out)
    assert obj["num_positive_roots"] == 4 and obj["coxeter"] == 4


def test_roots_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "roots", "A2")
    assert code == 0
    assert out.splitlines()[0] == "c1,c2,height"
    assert len(out.splitlines()) == 4


def test_poset_text_and_json(capsys):
    code, out, _ = run(capsys, "poset", "C3", "0,0,1")
    assert code == 0 and "14 weights, 17 edges" in out
    code, out, _ = run(capsys, "--format", "json", "poset", "E7:1,0,0,0,0,0,0")
    obj = json.loads(out)
    assert obj["dim"] == 56 and obj["num_edges"] == 84
    assert obj["upper_covering_polynomial"] == [1, 27, 27, 1]
    assert len(obj["elements"]) == 56


def test_poset_rejects_non_wmf(capsys):
    code, _, err = run(capsys, "poset", "A2", "1,1")
    assert code == 2 and "not weight multiplicity free" in err


def test_grading_and_periodic(capsys):
    code, out, _ = run(capsys, "grading", "E8", "--color", "4")
    assert code == 0 and "defect sum 30" in out
    code, out, _ = run(capsys, "--format", "json", "periodic", "E8",
                       "--color", "4")
    obj = json.loads(out)
    assert obj["order"] == 5
    assert all(d["defect"] == 0 for d in obj["degrees"])


def test_grading_bad_color(capsys):
    code, _, err = run(capsys, "grading", "A3", "--color", "9")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "periodic", "A3", "--color", "1")
    assert code == 2 and "error:" in err


def test_iso_exit_codes(capsys):
    code, out, _ = run(capsys, "iso", "B4:0,0,0,1", "D5:0,0,0,0,1")
    assert code == 0 and "isomorphic" in out
    code, out, _ = run(capsys, "iso", "A2:1,0", "A3:1,0,0")
    assert code == 1 and "not isomorphic" in out


def test_table1_small(capsys):
    code, out, _ = run(capsys, "table1", "--max-rank", "4")
    assert code == 0 and "PASS" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "short-defect",
                       "--max-rank", "4")
    assert code == 0 and "overall: PASS" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2 and "unknown suite" in err


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify", "--suite",
                       "edge-formulas", "--max-rank", "5")
    assert code == 0
    assert out.splitlines()[0].startswith("suite,")
