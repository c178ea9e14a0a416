"""Command-line surface: golden outputs, exit codes, JSON Lines
certificates."""

import json
import subprocess
import sys

import pytest

import degenbell.cli as cli
from degenbell.polynomials import bell_degenerate
from degenbell.spivey import make_certificate, run_identity


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_stirling2_csv(capsys):
    code, out, err = run(capsys, ["table", "--family", "stirling2-deg", "--n-max", "3",
                                  "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert "2,1,1;-1" in lines
    assert "3,1,1;-3;2" in lines
    assert lines[0] == "0,0,1"
    assert "1,0,0" in lines  # zero entries are explicit


def test_table_stirling2_text(capsys):
    code, out, err = run(capsys, ["table", "--family", "stirling2-deg", "--n-max", "2"])
    assert code == 0
    assert out == "n=0: 1\nn=1: 0 | 1\nn=2: 0 | 1 - 1 * L | 1\n"


def test_table_bell_single_row(capsys):
    code, out, err = run(capsys, ["table", "--family", "bell", "--n-max", "0"])
    assert code == 0
    assert out == "1\n"


def test_table_bell_text(capsys):
    code, out, err = run(capsys, ["table", "--family", "bell", "--n-max", "2"])
    assert out == "1\nx\nx^2 + (1 - 1 * L) * x\n"


def test_table_whitney_csv(capsys):
    code, out, err = run(capsys, ["table", "--family", "whitney", "--m", "2",
                                  "--n-max", "2", "--format", "csv"])
    assert code == 0
    assert "2,0,1;-1" in out.splitlines()


def test_table_r_whitney_rational_r(capsys):
    code, out, err = run(capsys, ["table", "--family", "r-whitney", "--m", "2",
                                  "--r", "5/2", "--n-max", "1", "--format", "json"])
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0] == {"coeff": ["1"], "k": 0, "n": 0}
    assert rows[1] == {"coeff": ["5/2"], "k": 0, "n": 1}


def test_table_family_csv_and_json(capsys):
    code, out, err = run(capsys, ["table", "--family", "dowling", "--m", "2",
                                  "--n-max", "2", "--format", "csv"])
    assert out.splitlines()[2] == "2,1;-1,4;-1,1"
    code, out, err = run(capsys, ["table", "--family", "r-dowling", "--m", "2",
                                  "--r", "0", "--n-max", "1", "--format", "json"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0] == {"coeffs": [["1"]], "n": 0}


def test_table_lambda_substitution(capsys):
    code, out, err = run(capsys, ["table", "--family", "bell", "--n-max", "3",
                                  "--subst-lambda", "0", "--format", "csv"])
    assert code == 0
    # classical Bell polynomials: row n lists Stirling counts
    assert out.splitlines()[3] == "3,0,1,3,1"
    code, out, err = run(capsys, ["table", "--family", "stirling2-deg", "--n-max", "2",
                                  "--subst-lambda", "1/2", "--format", "csv"])
    assert "2,1,1/2" in out.splitlines()


def test_table_errors(capsys):
    code, out, err = run(capsys, ["table", "--family", "bell", "--n-max", "-1"])
    assert code == 2 and "error" in err
    code, out, err = run(capsys, ["table", "--family", "whitney", "--m", "0", "--n-max", "2"])
    assert code == 2
    code, out, err = run(capsys, ["table", "--family", "r-whitney", "--r=-1/2", "--n-max", "2"])
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--family", "nope", "--n-max", "1"])
    assert exc.value.code == 2


def test_verify_single_point_equals_library(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-dowling",
                                  "--m", "2", "--n", "1", "--l", "1"])
    assert code == 0
    lines = out.splitlines()
    lib = run_identity("spivey-deg-dowling", m=2, n=1, l=1)
    assert json.loads(lines[0]) == lib.to_json_dict()
    assert json.loads(lines[1]) == {"failed": 0, "passed": 1, "total": 1}


def test_verify_classical_trivial_point(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "spivey-classical",
                                  "--n", "0", "--m", "0"])
    assert code == 0
    assert json.loads(out.splitlines()[0])["pass"] is True


def test_verify_rectangle_sweep(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-bell",
                                  "--n-max", "3", "--m-max", "2"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 13
    assert json.loads(lines[-1]) == {"failed": 0, "passed": 12, "total": 12}


def test_verify_triangular_sweep(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-bell",
                                  "--sum-max", "3"])
    assert code == 0
    assert json.loads(out.splitlines()[-1])["total"] == 10


def test_verify_r_dowling_params(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-r-dowling",
                                  "--m", "2", "--r", "5/2", "--n", "1", "--l", "1"])
    assert code == 0
    cert = json.loads(out.splitlines()[0])
    assert cert["params"] == {"l": 1, "m": 2, "n": 1, "r": "5/2"}


def test_verify_operator_selectors(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "eq10", "--n-max", "4"])
    assert code == 0
    assert json.loads(out.splitlines()[-1]) == {"failed": 0, "passed": 5, "total": 5}
    code, out, err = run(capsys, ["verify", "--identity", "eq34", "--m", "2", "--n", "2"])
    cert = json.loads(out.splitlines()[0])
    assert cert["pass"] is True and cert["params"] == {"m": 2, "n": 2}
    code, out, err = run(capsys, ["verify", "--identity", "eq35", "--m", "2",
                                  "--r", "3", "--n", "2"])
    assert json.loads(out.splitlines()[0])["params"]["r"] == 3
    code, out, err = run(capsys, ["verify", "--identity", "thm23",
                                  "--m", "1", "--n", "1", "--k", "1"])
    lines = out.splitlines()
    assert json.loads(lines[0])["identity"] == "thm23"
    assert json.loads(lines[1])["identity"] == "thm23-companion"
    assert json.loads(lines[-1])["total"] == 2
    code, out, err = run(capsys, ["verify", "--identity", "thm24",
                                  "--n-max", "2", "--m-max", "2"])
    assert code == 0
    code, out, err = run(capsys, ["verify", "--identity", "thm22",
                                  "--k-max", "2", "--degree", "6"])
    assert code == 0
    cert = json.loads(out.splitlines()[1])
    assert cert["params"] == {"degree": 6, "k": 1}
    assert cert["lhs"] == cert["rhs"]
    code, out, err = run(capsys, ["verify", "--identity", "thm22b",
                                  "--n", "2", "--degree", "8"])
    assert code == 0
    code, out, err = run(capsys, ["verify", "--identity", "fock-dowling",
                                  "--m", "2", "--l", "2", "--degree", "8"])
    cert = json.loads(out.splitlines()[0])
    assert cert["pass"] is True and "r" not in cert["params"]
    code, out, err = run(capsys, ["verify", "--identity", "fock-dowling",
                                  "--m", "2", "--r", "5/2", "--l", "2", "--degree", "8"])
    assert json.loads(out.splitlines()[0])["params"]["r"] == "5/2"


def test_verify_failure_sets_exit_code(capsys, monkeypatch):
    # the identities all hold, so force a failing certificate through
    # the plumbing to pin the exit-1 contract
    doctored = make_certificate("spivey-deg-bell", {"n": 1, "m": 1},
                                bell_degenerate(2), bell_degenerate(3))
    monkeypatch.setattr(cli, "run_identity", lambda *a, **k: doctored)
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-bell",
                                  "--n", "1", "--m", "1"])
    assert code == 1
    lines = out.splitlines()
    assert json.loads(lines[0])["pass"] is False
    assert json.loads(lines[1]) == {"failed": 1, "passed": 0, "total": 1}


def test_verify_usage_errors(capsys):
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-bell"])
    assert code == 2 and "required" in err
    code, out, err = run(capsys, ["verify", "--identity", "thm22",
                                  "--k", "9", "--degree", "4"])
    assert code == 2
    code, out, err = run(capsys, ["verify", "--identity", "spivey-deg-bell",
                                  "--sum-max", "-1"])
    assert code == 2
    code, out, err = run(capsys, ["verify", "--identity", "eq34", "--m", "0", "--n", "1"])
    assert code == 2


def test_normal_order_text(capsys):
    code, out, err = run(capsys, ["normal-order", "--expr", "a*ad"])
    assert code == 0
    assert out == "ad^1 * a^1 + 1\n"


def test_normal_order_json_matches_triangle_row(capsys):
    code, out, err = run(capsys, ["normal-order", "--expr", "dpow(ad*a, 3)",
                                  "--format", "json"])
    assert code == 0
    assert json.loads(out) == [
        {"coeff": ["1"], "i": 3, "j": 3},
        {"coeff": ["3", "-3"], "i": 2, "j": 2},
        {"coeff": ["1", "-3", "2"], "i": 1, "j": 1},
    ]


def test_normal_order_parse_error(capsys):
    code, out, err = run(capsys, ["normal-order", "--expr", "a*"])
    assert code == 2
    assert "(at byte 2)" in err


def test_apply_identity(capsys):
    code, out, err = run(capsys, ["apply", "--expr", "I", "--degree", "3"])
    assert code == 0
    assert out == "valid_up_to: 3\n1, 1, 1/2, 1/6\n"


def test_apply_annihilator(capsys):
    code, out, err = run(capsys, ["apply", "--expr", "a", "--degree", "5"])
    assert code == 0
    assert out == "valid_up_to: 4\n1, 1, 1/2, 1/6, 1/24\n"


def test_apply_stepped_number_power(capsys):
    code, out, err = run(capsys, ["apply", "--expr", "dpow(ad*a, 2)", "--degree", "8"])
    assert code == 0
    cells = out.splitlines()[1].split(", ")
    # x^3 coefficient of (x^2 + (1-L)x) e^x
    assert cells[0] == "0"
    assert cells[3] == "3/2 - 1/2 * L"


def test_apply_json(capsys):
    code, out, err = run(capsys, ["apply", "--expr", "dpow(ad*a, 2)", "--degree", "8",
                                  "--format", "json"])
    obj = json.loads(out)
    assert obj["degree_bound"] == 8
    assert obj["valid_up_to"] == 8
    assert obj["coeffs"][3] == ["3/2", "-1/2"]


def test_apply_errors(capsys):
    code, out, err = run(capsys, ["apply", "--expr", "I", "--degree", "-1"])
    assert code == 2
    code, out, err = run(capsys, ["apply", "--expr", "a*", "--degree", "4"])
    assert code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, err = run(capsys, ["table", "--family", "whitney", "--m", "2",
                                  "--n-max", "2", "--format", "csv",
                                  "--output", str(target)])
    assert code == 0
    assert out == ""
    assert "2,0,1;-1" in target.read_text().splitlines()
    code, out, err = run(capsys, ["table", "--family", "bell", "--n-max", "1",
                                  "--output", str(tmp_path / "no" / "dir.txt")])
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "degenbell", "normal-order", "--expr", "a*ad"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "ad^1 * a^1 + 1\n"
