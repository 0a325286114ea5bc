import csv
import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from alphaspectra.cli import RunConfig, UsageError, main

SCHEMAS = pathlib.Path(__file__).resolve().parents[1] / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.json").read_text())


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def strict_rows(text):
    return list(csv.reader(io.StringIO(text, newline=""), strict=True))


def test_rho_cycle():
    code, out = run("rho", "--family", "C(7)", "--alpha", "0.3")
    assert code == 0
    assert "rho=1.000000" in out and "iterations=" in out and "residual=" in out


def test_rho_reference_value():
    code, out = run("rho", "--family", "Inf(5,5,5)", "--alpha", "0.5", "--decimals", "3")
    assert code == 0 and "rho=1.313" in out
    # full precision, compared with the truncated reference value 1.312
    _, full = run("rho", "--family", "Inf(5,5,5)", "--alpha", "0.5", "--output", "json")
    assert int(json.loads(full)["rho"] * 1000) == 1312


def test_rho_bisect_method():
    code, out = run("rho", "--family", "Th(2,1;4)", "--alpha", "0.5", "--method", "bisect", "--output", "json")
    _, ref = run("rho", "--family", "Th(2,1;4)", "--alpha", "0.5", "--output", "json")
    assert code == 0
    assert json.loads(out)["rho"] == pytest.approx(json.loads(ref)["rho"], abs=1e-10)


def test_rho_csv():
    code, out = run("rho", "--family", "R(3,2)", "--alpha", "0.2", "--output", "csv")
    rows = strict_rows(out)
    assert code == 0 and rows[0][:3] == ["digraph", "alpha", "rho"] and rows[1][0] == "R(3,2)"


@pytest.mark.parametrize("argv", [
    ("rho", "--family", "Q(3)", "--alpha", "0.2"),
    ("rho", "--family", "C(3", "--alpha", "0.2"),
    ("rho", "--family", "C(3)", "--alpha", "1.0"),
    ("rho", "--family", "C(3)", "--alpha", "0.2", "--tol", "0"),
    ("rho", "--alpha", "0.2"),
    ("verify", "nosuch"),
    ("verify", "inf_max", "--alpha", "0.5"),
    ("verify", "c_ordering", "--p", "3", "--q", "3", "--g", "C(3)", "--alpha", "0.2"),
    ("table1", "--m", "4", "--alpha", "0.2"),
    ("conjecture", "--alphas", "0.3"),
    ("bogus",),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_non_convergence_exit_3(monkeypatch):
    from alphaspectra import spectral

    real = spectral.spectral_radius
    monkeypatch.setattr(spectral, "spectral_radius", lambda g, a, tol=1e-12: real(g, a, tol, max_iter=5))
    code, _ = run("rho", "--family", "ThHat(18)", "--alpha", "0.8")
    assert code == 3


def test_falsified_exit_1(monkeypatch):
    from alphaspectra import cli
    from alphaspectra.extremal import TheoremReport

    def broken(m, alpha):
        rep = TheoremReport("inf_max", {"m": m, "alpha": alpha})
        rep.fail("argmax", "forced")
        return rep

    monkeypatch.setitem(cli.VERIFIERS, "inf_max", (("m", "alpha"), broken))
    code, out = run("verify", "inf_max", "--m", "8", "--alpha", "0.2")
    assert code == 1
    d = json.loads(out)
    assert d["verified"] is False and d["counterexamples"]
    jsonschema.validate(d, schema("theorem_report"))


def test_charpoly_pair():
    code, out = run("charpoly", "--family", "Th(2,1;1)", "--x", "2", "--alpha", "0", "--output", "json")
    d = json.loads(out)
    assert code == 0 and d["closed_form"] == pytest.approx(5) and d["oracle"] == pytest.approx(5)
    code, out = run("charpoly", "--family", "Th(2,1;2)", "--x", "0.5", "--alpha", "0.5")
    assert code == 2


def test_table1_singleton():
    code, out = run("table1", "--m", "6", "--alpha", "0.0", "--top", "10")
    rows = strict_rows(out)
    assert code == 0
    assert rows == [["rank", "spec", "rho"], ["1", "Inf(2,2,2)", rows[1][2]]]


def test_table1_first_row():
    code, out = run("table1", "--m", "15", "--alpha", "0.5", "--top", "4", "--restrict-middle")
    rows = strict_rows(out)
    assert [r[1] for r in rows[1:]] == ["Inf(5,5,5)", "Inf(3,6,6)", "Inf(4,5,6)", "Inf(3,5,7)"]


def test_table2_right_column_json():
    code, out = run("table2", "--m", "18", "--s", "4", "--t", "3", "--alpha", "0.2", "--top", "4", "--output", "json")
    d = json.loads(out)
    jsonschema.validate(d, schema("ranked_family"))
    assert code == 0 and d["count"] == 115
    assert [e["spec"] for e in d["entries"]][:2] == ["Th(2,2,2,1;4,4,3)", "Th(2,2,2,2;4,3,3)"]


@pytest.mark.parametrize("argv", [
    ("verify", "first_four", "--n", "5", "--alpha", "0.5"),
    ("verify", "inf_max", "--m", "15", "--alpha", "0.5"),
    ("verify", "rose_monotone", "--m", "8", "--k", "3", "--alpha", "0.3"),
    ("verify", "c_ordering", "--p", "3", "--q", "2", "--g", "C(3)", "--alpha", "0.4"),
    ("verify", "theta_block", "--m1", "7", "--m2", "5", "--s", "3", "--t", "2", "--alpha", "0.3"),
    ("verify", "theta_family", "--m", "12", "--s", "3", "--t", "2", "--alpha", "0.2"),
    ("verify", "joint_extremal", "--m", "10", "--k", "3", "--alpha", "0.5"),
    ("verify", "girth_chain", "--n", "6", "--alpha", "0.5"),
    ("verify", "delta_threshold", "--m", "12", "--k", "4"),
])
def test_verify_reports_validate(argv):
    code, out = run(*argv)
    d = json.loads(out)
    jsonschema.validate(d, schema("theorem_report"))
    assert code == 0 and d["verified"] is True and d["theorem_id"] == argv[1]


def test_conjecture_csv_is_strict():
    code, out = run("conjecture", "--n-min", "5", "--n-max", "7", "--alphas", "0.6,0.9")
    rows = strict_rows(out)
    assert code == 0
    assert rows[0] == ["n", "alpha", "rho_theta31", "rho_theta_hat", "gap", "sign", "boundary"]
    assert len(rows) == 1 + 3 * 3 and all(len(r) == 7 for r in rows)
    assert all(float(r[4]) >= -1e-9 for r in rows[1:] if r[6] == "1")


def test_dump_and_load(tmp_path):
    path = tmp_path / "g.json"
    code, first = run("rho", "--family", "Th(3,2;2,1)", "--alpha", "0.4", "--dump", str(path), "--output", "json")
    assert code == 0
    jsonschema.validate(json.loads(path.read_text()), schema("digraph"))
    code, second = run("rho", "--load", str(path), "--alpha", "0.4", "--output", "json")
    assert json.loads(first)["rho"] == json.loads(second)["rho"]


def test_load_bad_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("rho", "--load", str(bad), "--alpha", "0.2")[0] == 2


@pytest.mark.parametrize("argv", [
    ("table1", "--m", "12", "--alpha", "0.3", "--output", "json"),
    ("table2", "--m", "12", "--s", "3", "--t", "2", "--alpha", "0.6"),
    ("verify", "girth_chain", "--n", "7", "--alpha", "0.2"),
    ("conjecture", "--n-min", "5", "--n-max", "6"),
])
def test_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "alphaspectra.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env={"SPECTRA_THREADS": "4", "PATH": ""}).stdout
    assert a == b


def test_run_config_validation():
    assert RunConfig("rho", alpha=0.5).tol == 1e-12
    with pytest.raises(UsageError):
        RunConfig("rho", alpha=-0.1)
    with pytest.raises(UsageError):
        RunConfig("rho", tol=-1.0)
