import json
import subprocess
import sys

import pytest

from helpers import SCENES
from necktie.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_k1_holds(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "1.1", "--scene", str(SCENES / "k1.json"))
    assert code == 0
    assert json.loads(out)["claims"]["1.1"]["holds"] == 1


def test_verify_q_on_b1c1_exits_2(capsys):
    code, out, err = run(capsys, "verify", "--claim", "1.6", "--scene", str(SCENES / "k1_q_on_b1c1.json"))
    assert code == 2 and out == ""
    assert "Q on line B1C1" in err


def test_verify_all_reports_degenerate_trace(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "all", "--scene", str(SCENES / "k1.json"))
    doc = json.loads(out)
    assert code == 2
    assert doc["claims"]["1.5-trace"]["degenerate"] == 1
    assert all(c["violated"] == 0 for c in doc["claims"].values())


def test_verify_inapplicable_claim(capsys):
    code, _, err = run(capsys, "verify", "--claim", "lemma1", "--scene", str(SCENES / "k1.json"))
    assert code == 2 and "lemma1" in err


def test_io_and_parse_errors(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--claim", "1.1", "--scene", str(tmp_path / "missing.json"))
    assert code == 3 and err
    bad = tmp_path / "bad.json"
    bad.write_text('{"points": {"A": ["1//2", "0"]}}')
    code, _, err = run(capsys, "verify", "--claim", "1.1", "--scene", str(bad))
    assert code == 3 and "points.A[0]" in err


def test_bad_arguments_exit_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--claim", "7.7", "--scene", "x"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main(["fuzz", "--claim", "all", "--field", "complex"])
    assert info.value.code == 3


def test_fuzz_small(capsys):
    code, out, _ = run(capsys, "fuzz", "--claim", "all", "--trials", "20", "--seed", "3", "--bound", "50")
    assert code == 0
    doc = json.loads(out)
    assert doc["plan"] == {"bound": 50, "field": "rational", "lemma1_samples": 8, "seed": 3, "trials": 20}


def test_fuzz_prime(capsys):
    code, out, _ = run(capsys, "fuzz", "--claim", "1.4", "--trials", "10", "--field", "prime")
    assert code == 0 and json.loads(out)["plan"]["modulus"] == 2**61 - 1


def test_figure(capsys, tmp_path):
    out = tmp_path / "k1.svg"
    code, _, _ = run(capsys, "figure", "--scene", str(SCENES / "k1.json"), "--layers", "triangle,necktie,v", "--out", str(out))
    assert code == 0 and b">V_C</text>" in out.read_bytes()
    code, _, _ = run(capsys, "figure", "--scene", str(SCENES / "k1.json"), "--out", str(out), "--normalize")
    assert code == 0


def test_figure_without_configuration(capsys, tmp_path):
    code, _, err = run(capsys, "figure", "--scene", str(SCENES / "lemma1.json"), "--out", str(tmp_path / "x.svg"))
    assert code == 2 and err


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "necktie", "verify", "--claim", "lemma2", "--scene", str(SCENES / "k1.json")],
        capture_output=True,
    )
    assert r.returncode == 0
    assert b'"X":["20/17","24/17","1"]' in r.stdout
