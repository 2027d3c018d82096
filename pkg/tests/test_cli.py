import json
import subprocess
import sys

import pytest

from g2commute.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lemma_ec_json(capsys):
    code, out, _ = run(capsys, "lemma-ec", "--json")
    assert code == 0
    data = json.loads(out)
    assert [e["n"] for e in data["entries"]] == list(range(2, 19, 2))
    e10 = data["entries"][4]["value"]["terms"]
    assert e10 == [{"mono": {"c4": 1, "c6": 1}, "coeff": "-1"}, {"mono": {"c2": 2, "c6": 1}, "coeff": "3/2"}]


def test_global_flags_before_and_after(capsys):
    _, before, _ = run(capsys, "--json", "mu", "--index", "27")
    _, after, _ = run(capsys, "mu", "--index", "27", "--json")
    assert before == after
    assert json.loads(before)["coeff"] == "-2"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--group", "G2", "--prime", "5", "--k", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"answer": "NO", "cited": "Thm D"}
    code, out, _ = run(capsys, "oracle", "--group", "G2", "--prime", "5", "--k", "4", "--json")
    assert json.loads(out)["answer"] == "UNKNOWN"
    code, out, _ = run(capsys, "oracle", "--group", "G2", "--prime", "5", "--k", "4", "--assume-williams-monotone", "--json")
    assert json.loads(out)["answer"] == "NO"
    code, out, _ = run(capsys, "oracle", "--group", "G2", "--prime", "31", "--k", "3", "--cat-b", "2")
    assert out.strip() == "gauge_cat_b: YES (Thm B')"


def test_theorem_d_reports_certificate(capsys):
    code, out, _ = run(capsys, "theorem-d", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["certificate_verified"] is True
    assert data["certificate"]["verdict"] in ("SOLVABLE", "UNSOLVABLE")
    assert len(data["sign_survey"]) == 8


def test_factorial_form(capsys):
    _, out, _ = run(capsys, "phi-matrix", "--factorial-form")
    assert "9!/5!" in out and "2*13!/5!" in out and "17!/(5!)^3" in out


def test_solve_from_files(tmp_path, capsys):
    (tmp_path / "a.json").write_text('[["5"]]')
    (tmp_path / "t.json").write_text('{"target": ["1"]}')
    code, out, _ = run(capsys, "solve", "--matrix", str(tmp_path / "a.json"), "--target", str(tmp_path / "t.json"), "--prime", "5", "--json")
    assert code == 0
    assert json.loads(out) == {
        "verdict": "UNSOLVABLE",
        "prime": 5,
        "invariant_factor_valuations": [1],
        "dual_witness": ["1/5"],
        "dual_valuation": -1,
    }


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["jz", "--n", "7"],
        ["jz"],
        ["transgression", "--degree", "24"],
        ["oracle", "--group", "X9", "--prime", "5", "--k", "3"],
        ["oracle", "--group", "G2", "--prime", "6", "--k", "3"],
        ["solve", "--matrix", "/nonexistent", "--target", "/nonexistent", "--prime", "5"],
        ["e-pullback", "--n", "3", "--raw", "--reduced"],
    ],
)
def test_invalid_input_exits_1(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_output_deterministic():
    cmd = [sys.executable, "-m", "g2commute.cli", "ch-table", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_self_test_exit_code_tracks_golden(capsys):
    from g2commute.golden import self_test

    expected = 0 if all(c.ok for c in self_test()) else 2
    code, out, _ = run(capsys, "--self-test")
    assert code == expected
    assert "golden checks passed" in out
