import json
import subprocess
import sys
from fractions import Fraction

import pytest

from g2voa.adjoint_polys import CartanPolynomial, reference_polynomials
from g2voa.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify-lemmas")
    assert code == 0
    assert "identities hold" in out
    assert "FAIL" not in out
    assert out.count("note ") == 5


def test_verify_lemmas_json(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert all(r["status"] == "pass" for r in data)
    assert sum("deviation" in r for r in data) == 5


def test_flip_sign_is_a_failure(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--flip-sign", "E10,E01")
    assert code == 1
    assert "FAIL" in out


def test_flip_sign_bad_name(capsys):
    code, _, err = run(capsys, "verify-lemmas", "--flip-sign", "E10,X99")
    assert code == 2 and "flip-sign" in err


@pytest.mark.parametrize("level", ["-5/3", "-4/3", "-2/3"])
def test_singular(capsys, level):
    code, out, _ = run(capsys, "singular", "--level", level, "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["singular"] is True and data["level"] == level


def test_zhu_image_check(capsys):
    code, out, _ = run(capsys, "zhu-image", "--level", "-2/3", "--check")
    assert code == 0
    assert "[a][b][b]" in out


def test_polynomials_json_round_trip(capsys, pinned_constants):
    code, out, _ = run(capsys, "polynomials", "--level=-4/3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    ref = reference_polynomials(Fraction(-4, 3))
    for key, entry in data["polynomials"].items():
        assert entry["constant"] == pinned_constants["-4/3"][key]
        assert CartanPolynomial.from_json(entry["coefficients"]) == ref[key]
        assert CartanPolynomial.parse(entry["text"]) == ref[key]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--level", "-2/3", "--check", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["zeros"]) == 12 and all(data["admissible"])
    assert data["flags"] == []
    assert {"mu10": "2", "mu01": "0"} in data["dominant_integral"]


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--level", "-5/3")
    assert code == 0 and "3 common zeros" in out


def test_admissible(capsys):
    code, out, _ = run(capsys, "admissible", "--level", "-5/3", "--mu", "1/7,1/11", "--check")
    assert code == 1 and "span_ok: false" in out
    code, out, _ = run(capsys, "admissible", "--level", "-5/3", "--mu", "1,-4/3", "--check")
    assert code == 0 and "admissible: true" in out


def test_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "singular", "--level", "-5/3", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["singular"] is True


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["singular"],
        ["singular", "--level", "1/2"],
        ["singular", "--level", "abc"],
        ["admissible", "--level", "-5/3", "--mu", "1"],
        ["classify", "--level", "-5/3", "--format", "xml"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "verify-lemmas" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "g2voa", "singular", "--level", "-4/3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "singular: true" in proc.stdout
