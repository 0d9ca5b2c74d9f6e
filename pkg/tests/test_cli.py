import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from maminda.cli import run as main


def run(*argv):
    p = subprocess.run([sys.executable, "-m", "maminda", *argv], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def test_distortion_csv():
    code, out, _ = run("distortion", "--psi", "cardioid", "--radii", "1,0.8,2/3,0.5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["r", "theta1", "min_mod", "m", "upper"]
    assert abs(float(rows[3]["m"]) - 0.467769) < 1e-4
    assert abs(float(rows[0]["theta1"]) - 1.88438) < 1e-3


def test_bohr_json(capsys):
    assert main(["bohr", "--psi", "janowski", "--D", "1", "--E", "-1"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert abs(d["r0"] - 0.171572875254) < 1e-11


def test_member_verdicts(capsys):
    assert main(["member", "--psi", "cardioid", "--coeffs", "[0.05]"]) == 0
    assert json.loads(capsys.readouterr().out)["member"] is True
    assert main(["member", "--psi", "janowski", "--D", "1", "--E", "-1", "--coeffs", "[0.9]"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["member"] is False and d["witness"] is not None


def test_curve_lemniscate_csv(capsys):
    assert main(["curve", "--psi", "lemniscate", "--samples", "256", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    w = np.array([float(r["re"]) + 1j * float(r["im"]) for r in rows])
    assert len(w) == 256
    # csv carries 6 significant digits
    np.testing.assert_allclose(np.abs(w * w - 1), 1.0, atol=5e-5)
    assert main(["curve", "--psi", "lemniscate", "--samples", "256", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    w = np.array(d["re"]) + 1j * np.array(d["im"])
    np.testing.assert_allclose(np.abs(w * w - 1), 1.0, atol=1e-10)


def test_curve_svg(tmp_path):
    out = tmp_path / "c.svg"
    assert main(["curve", "--psi", "cardioid", "--format", "svg", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("<svg") or "<svg" in text
    assert "polyline" in text


def test_deterministic_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["radius", "--psi", "cardioid", "--family", "F", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_radius_json(capsys):
    assert main(["radius", "--psi", "alpha_halfplane", "--alpha", "0.5", "--family", "H", "--q", "0.5"]) == 0
    assert abs(json.loads(capsys.readouterr().out)["value"] - 0.457427) < 1e-6


def test_usage_errors(tmp_path):
    assert run("distortion", "--psi", "nosuch")[0] == 1
    assert run("bohr", "--psi", "janowski", "--D", "0.2", "--E", "0.5")[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("curve", "--psi", "cardioid", "--out", str(tmp_path / "missing" / "x.csv"))[0] == 1
    assert run("member", "--psi", "cardioid")[0] == 1


def test_verify_exit_codes():
    assert run("verify", "bulextn")[0] == 0
    assert run("verify", "misprints")[0] == 0


@pytest.mark.slow
def test_verify_failure_is_exit_two():
    code, out, _ = run("verify", "acceptance", "--criteria", "3")
    assert code == 2
    assert "FAIL criterion 3" in out
