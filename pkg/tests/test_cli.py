import json
import subprocess
import sys

import pytest

from krvlab.cli import build_parser, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims_text(capsys):
    code, out, err = run_cli(capsys, "dims", "2", "6")
    assert code == 0
    assert "all rows match" in out
    assert err == ""


def test_dims_csv(capsys):
    code, out, _ = run_cli(capsys, "dims", "3", "9", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,j,dim,formula,match"
    assert lines[3] == "3,3,1,1,true"
    assert lines[9] == "3,9,2,2,true"
    assert all(line.endswith("true") for line in lines[1:])


def test_dims_json_schema_key(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "dims", "2", "4")
    assert code == 0
    body = json.loads(out)
    assert body["schema"] == "krv-lab/1"
    assert [row["dim"] for row in body["rows"]] == [0, 1, 0, 1]


def test_dims_parallel(capsys):
    code, out, _ = run_cli(capsys, "dims", "2", "5", "--jobs", "2",
                           "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[2] == "2,2,1,1,true"


def test_basis_text(capsys):
    code, out, _ = run_cli(capsys, "basis", "2", "2")
    assert code == 0
    assert out.splitlines()[0] == "dim krv(2,2) = 1"
    assert "[0] theta(" in out

    code, out, _ = run_cli(capsys, "basis", "2", "3")
    assert code == 0
    assert out.strip() == "dim krv(2,3) = 0"


def test_relaxed_div_flag(capsys):
    code, out, _ = run_cli(capsys, "--relaxed-div", "basis", "4", "4")
    assert code == 0
    assert out.splitlines()[0] == "dim krv(4,4) = 2"


def test_delta_text(capsys):
    code, out, _ = run_cli(capsys, "delta", "2")
    assert code == 0
    assert "delta_2 = theta(x; [[x,y],y])" in out
    assert "value      = 2*tr(xxyy) - 2*tr(xyxy)" in out
    assert "u(y)       = -2*xyy + 4*yxy - 2*yyx" in out
    assert "divergence = 0" in out
    assert "symplectic = yes" in out


def test_verify_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "euler", "--cases", "6",
                           "--seed", "9")
    assert code == 0
    assert "suite euler: 6/6 passed (seed 9)" in out
    assert out.count("PASS") == 6


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "verify", "cocycle",
                           "--cases", "4")
    assert code == 0
    body = json.loads(out)
    assert body["passed"] is True
    assert body["schema"] == "krv-lab/1"
    assert len(body["cases"]) == 4


def test_eval_prints_value(capsys):
    code, out, _ = run_cli(capsys, "eval", "tr(x*y) + tr(y*x)")
    assert code == 0
    assert out.strip() == "2*tr(xy)"


def test_eval_json(capsys):
    code, out, _ = run_cli(capsys, "eval", "[x,[y,x]]", "--format", "json")
    body = json.loads(out)
    assert body["sort"] == "lie"
    assert body["value"] == "-[x,[x,y]]"


@pytest.mark.parametrize("argv,fragment", [
    (("eval", "tr(x) + x"), "expected trace"),
    (("eval", "x +"), "unexpected end"),
    (("delta", "5"), "even subscripts"),
    (("dims", "3", "14"), "cap"),
    (("--format", "csv", "basis", "2", "2"), "csv format"),
])
def test_usage_errors_exit_2(capsys, argv, fragment):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert fragment in err
    assert err.startswith("error:")


def test_argparse_rejects_bad_subcommand():
    with pytest.raises(SystemExit) as exit_info:
        build_parser().parse_args(["frobnicate"])
    assert exit_info.value.code == 2


def test_argparse_rejects_bad_weight():
    with pytest.raises(SystemExit) as exit_info:
        build_parser().parse_args(["dims", "4", "3"])
    assert exit_info.value.code == 2


def test_global_flags_accepted_in_both_positions(capsys):
    code_before, out_before, _ = run_cli(capsys, "--format", "csv", "dims",
                                         "2", "3")
    code_after, out_after, _ = run_cli(capsys, "dims", "2", "3", "--format",
                                       "csv")
    assert code_before == code_after == 0
    assert out_before == out_after


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "krvlab", "eval", "dF_y(tr(x*y))"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "x"
