import json
from math import exp, pi, sqrt

import pytest

from cylwigner.cli import main


VACUUM = "raw c[0,0]=1"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_single_point_vacuum_csv(capsys):
    code, out, err = run(capsys, [
        "wigner-cyl", "--state", VACUUM, "--r-min", "1", "--r-max", "2",
        "--nr", "1", "--nphi", "1", "--lmax", "0",
    ])
    assert code == 0
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert len(rows) == 1
    r, phi, ell, w = rows[0].split(",")
    assert (float(r), float(phi), int(ell)) == (1.0, 0.0, 0)
    assert float(w) == pytest.approx(4.0 * sqrt(pi) * exp(-1.0), rel=1e-12)
    header = [ln for ln in out.splitlines() if ln.startswith("#")]
    assert any("state: raw c[0,0]=1" in ln for ln in header)


def test_json_export_loads(capsys):
    code, out, _ = run(capsys, [
        "wigner-cyl", "--state", "eigenstate N=1 l0=1", "--r-min", "0.5",
        "--r-max", "1.5", "--nr", "2", "--nphi", "2", "--lmax", "1",
        "--format", "json",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["state"] == "eigenstate N=1 l0=1"
    assert doc["ell_values"] == [-1, 0, 1]
    assert len(doc["values"]) == 2
    assert len(doc["values"][0]) == 2
    assert len(doc["values"][0][0]) == 3


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, ["wigner-cyl", "--state", "bogus N=1"])
    assert code == 2
    record = json.loads(err)
    assert record["exit"] == 2
    assert record["error"] == "SpecParseError"


def test_precondition_exit_3_parity(capsys):
    code, _, err = run(capsys, ["wigner-cyl", "--state", "eigenstate N=3 l0=2"])
    assert code == 3
    assert "parity" in json.loads(err)["message"]


def test_precondition_exit_3_grid(capsys):
    code, _, err = run(capsys, [
        "wigner-cyl", "--state", VACUUM, "--r-min", "0", "--r-max", "2",
        "--nr", "2", "--nphi", "1", "--lmax", "0",
    ])
    assert code == 3
    assert "r_min" in json.loads(err)["message"]


def test_oracle_check_vacuum_passes(capsys):
    code, out, _ = run(capsys, ["oracle-check", "--state", VACUUM,
                                "--n-points", "6", "--seed", "3"])
    assert code == 0
    assert "PASS" in out
    assert f"{4 * pi ** 2:.4f}" in out  # kappa around 39.4784


def test_oracle_check_eigenstate_passes(capsys):
    code, out, _ = run(capsys, ["oracle-check", "--state", "eigenstate N=2 l0=0",
                                "--n-points", "5", "--seed", "1"])
    assert code == 0
    assert out.strip().endswith("PASS")


def test_byte_determinism(tmp_path, capsys):
    argv = [
        "wigner-cyl", "--state", "summed l0=1 Nmax=5", "--r-min", "0.3",
        "--r-max", "2.3", "--nr", "3", "--nphi", "4", "--lmax", "2",
    ]
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_bytes()) > 0


def test_thread_env_does_not_change_output(tmp_path, monkeypatch):
    argv = [
        "wigner-cyl", "--state", "eigenstate N=2 l0=0", "--r-min", "0.4",
        "--r-max", "2.0", "--nr", "3", "--nphi", "2", "--lmax", "2",
    ]
    one = tmp_path / "one.csv"
    many = tmp_path / "many.csv"
    monkeypatch.delenv("OAM_WIGNER_THREADS", raising=False)
    assert main(argv + ["--out", str(one)]) == 0
    monkeypatch.setenv("OAM_WIGNER_THREADS", "4")
    assert main(argv + ["--out", str(many)]) == 0
    assert one.read_bytes() == many.read_bytes()


def test_quad_order_too_small_exit_4(capsys):
    code, _, err = run(capsys, [
        "wigner-cyl", "--state", "summed l0=0 Nmax=20", "--r-min", "0.5",
        "--r-max", "1.5", "--nr", "1", "--nphi", "1", "--lmax", "0",
        "--quad-order", "4",
    ])
    assert code == 4
    assert json.loads(err)["error"] == "QuadratureOrderError"
