import csv
import io
import json
import math
import subprocess
import sys

import pytest

from eulerfactorial.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    return code, json.loads(out), err


def test_eval_gammaE_integer():
    code, rec, _ = run_json("eval", "gammaE", "--a", "1", "--b", "1", "--x", "3")
    assert code == 0 and rec["status"] == "ok"
    assert rec["outputs"]["value"] == pytest.approx(6.0, rel=1e-14)


def test_eval_delta_half():
    code, rec, _ = run_json("eval", "delta", "--a", "1", "--b", "1", "--x", "0.5")
    assert code == 0
    assert rec["outputs"]["value"] == pytest.approx(0.79788456080286541, rel=1e-14)


def test_eval_log_scale_beyond_double_range():
    code, rec, _ = run_json("eval", "gammaE", "--a", "1", "--b", "1", "--x", "200", "--log")
    assert code == 0
    assert rec["outputs"]["sign"] == 1
    assert rec["outputs"]["log_abs"] == pytest.approx(math.lgamma(201), rel=1e-14)
    assert "value" not in rec["outputs"]
    code, rec, _ = run_json("eval", "gammaE", "--a", "1", "--b", "1", "--x", "200")
    assert rec["outputs"]["value"] is None and rec["outputs"]["overflow"] is True


def test_eval_gamma_negative():
    code, rec, _ = run_json("eval", "gamma", "--x", "-0.5")
    assert code == 0
    assert rec["outputs"]["value"] == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-14)
    assert rec["outputs"]["sign"] == -1


def test_eval_domain_error_exit_1():
    code, rec, err = run_json("eval", "gammaE", "--a", "1", "--b", "1", "--x", "-2")
    assert code == 1 and rec["status"] == "error" and rec["message"]
    assert err
    code, rec, _ = run_json("eval", "gamma", "--x", "-3")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["eval", "beta", "--x", "1"],
    ["eval", "gammaE", "--x", "1"],
    ["eval", "gammaE", "--a", "1", "--b", "1"],
    ["eval", "gammaE", "--a", "x", "--b", "1", "--x", "1"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, _ = run(*argv)
    assert code == 2


def test_constants():
    code, rec, _ = run_json("constants", "--a", "1", "--b", "1")
    assert code == 0
    out = rec["outputs"]
    assert out["A"] == pytest.approx(2.5066282746310002, rel=1e-14)
    assert out["B"] == pytest.approx(2.3316439815971242, rel=1e-14)
    assert out["C"] == pytest.approx(1.7724538509055160, rel=1e-14)
    assert out["k"] == pytest.approx(0.7978845608028654, rel=1e-14)
    assert set(out["residuals"]) == {"A=BC/sqrt(e)", "B=Ck*sqrt(e)", "A=B^2/(e*k)"}
    assert max(out["residuals"].values()) <= 1e-12


def test_constants_rejects_nonpositive():
    code, rec, err = run_json("constants", "--a", "0", "--b", "1")
    assert code == 2
    assert rec["status"] == "error" and "positive" in rec["message"]
    assert "positive" in err


def test_estimate():
    code, rec, _ = run_json("estimate", "gammaE", "--a", "1", "--b", "1", "--n", "10000")
    assert code == 0
    assert rec["outputs"]["estimate"] == pytest.approx(2.5066282746, rel=2e-5)
    assert rec["outputs"]["n_used"] == 10000
    _, rec, _ = run_json("estimate", "gammaE", "--a", "1", "--b", "1", "--n", "100")
    assert rec["outputs"]["relative_error"] <= 1e-3
    _, rec, _ = run_json("estimate", "delta", "--a", "2", "--b", "3", "--n", "1000")
    assert rec["outputs"]["relative_error"] <= 1e-3
    code, _, _ = run("estimate", "gammaE", "--a", "1", "--b", "1", "--n", "9")
    assert code == 2


def test_verify_duplication():
    code, rec, _ = run_json("verify", "duplication", "--x-min", "0.1", "--x-max", "20", "--steps", "200")
    assert code == 0
    out = rec["outputs"]
    assert out["passed"] is True and len(out["grid"]) == len(out["residuals"]) == 200
    assert out["tolerance"] == 1e-11


def test_verify_multiplication():
    code, rec, _ = run_json("verify", "multiplication", "--n", "3", "--x-min", "0.5", "--x-max", "10", "--steps", "100")
    assert code == 0 and rec["outputs"]["passed"]
    code, _, _ = run("verify", "multiplication", "--x-min", "0.5", "--x-max", "10", "--steps", "100")
    assert code == 2


def test_verify_chain():
    code, rec, _ = run_json("verify", "chain", "--a", "1", "--b", "1")
    assert code == 0
    assert len(rec["outputs"]["residuals"]) == 3
    assert max(rec["outputs"]["residuals"]) <= 1e-12


def test_verify_failure_exit_1():
    code, rec, _ = run_json("verify", "duplication", "--x-min", "0.1", "--x-max", "40",
                            "--steps", "50", "--tolerance", "0")
    assert code == 1
    assert rec["outputs"]["passed"] is False and rec["message"]


@pytest.mark.parametrize("argv", [
    ["verify", "duplication", "--x-min", "1", "--x-max", "1", "--steps", "10"],
    ["verify", "duplication", "--x-min", "1", "--x-max", "2"],
    ["verify", "duplication", "--x-min", "1", "--x-max", "2", "--steps", "10", "--format", "xml"],
    ["verify", "chain", "--a", "1"],
])
def test_verify_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_csv_and_json_carry_same_numbers():
    args = ["verify", "multiplication", "--n", "4", "--x-min", "0.5", "--x-max", "6", "--steps", "12"]
    _, js, _ = run(*args)
    _, cs, _ = run(*args, "--format", "csv")
    rec = json.loads(js)
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert [float(r["x"]) for r in rows] == rec["outputs"]["grid"]
    assert [float(r["residual"]) for r in rows] == rec["outputs"]["residuals"]
    # identical text, not just equal values
    assert [r["x"] for r in rows] == [f"{v:.16e}" for v in rec["outputs"]["grid"]]


def test_chain_csv_has_labels():
    code, out, _ = run("verify", "chain", "--a", "2", "--b", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["check"] for r in rows] == ["A=B^2/(e*k)", "cancelled", "duplication"]


@pytest.mark.parametrize("argv", [
    ["constants", "--a", "3.7", "--b", "0.5"],
    ["verify", "duplication", "--x-min", "0.1", "--x-max", "20", "--steps", "50"],
    ["eval", "theta", "--a", "2", "--b", "3", "--x", "7.25"],
])
def test_output_is_byte_identical(argv):
    assert run(*argv)[1] == run(*argv)[1]


def test_numbers_use_17_significant_digits():
    _, out, _ = run("constants", "--a", "1", "--b", "1")
    assert '"A": 2.5066282746310' in out
    assert "e+00" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerfactorial", "eval", "gammaE",
                           "--a", "2", "--b", "3", "--x", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["value"] == pytest.approx(80.0, rel=1e-14)
