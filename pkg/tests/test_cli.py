"""End-to-end command-line checks: outputs, file artifacts, exit codes."""

import json

import pytest

from relaxwave import MediumParams, reduce_swsp
from relaxwave.cli import main

from helpers import (
    CRIT_ALPHA_024,
    CRIT_ALPHA_05,
    K_024_01,
    LINE2_NORMALIZED,
    THETA_SING_024_01,
    W_024_01,
)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_dispersion_command(capsys):
    code, obj = run_json(capsys, ["dispersion", "--v", "0.24", "--alpha", "0.1"])
    assert code == 0
    assert obj["k"] == pytest.approx(K_024_01, abs=1e-15)
    assert obj["omega"] == pytest.approx(W_024_01, abs=1e-15)
    assert abs(obj["residual"]) < 1e-12


def test_critical_alpha_plain_and_json(capsys):
    assert main(["critical-alpha", "--v", "0.24"]) == 0
    out = capsys.readouterr().out
    assert float(out.strip()) == pytest.approx(CRIT_ALPHA_024, abs=1e-15)
    code, obj = run_json(capsys, ["critical-alpha", "--v", "0.5", "--format", "json"])
    assert code == 0
    assert obj["alpha_critical"] == pytest.approx(CRIT_ALPHA_05, abs=1e-14)


def test_classify_command(capsys):
    code, obj = run_json(capsys, ["classify", "--v", "0.24", "--alpha", "0.1"])
    assert code == 0
    assert obj["class"] == "loop"
    assert obj["momentum_shape"] == "loop-like"
    assert obj["singular_thetas"][1] == pytest.approx(THETA_SING_024_01, abs=1e-12)
    assert obj["alpha_critical"] == pytest.approx(CRIT_ALPHA_024, abs=1e-14)


def test_soliton_profile_csv(tmp_path, capsys):
    dest = tmp_path / "profile.csv"
    code = main(["soliton-profile", "--v", "0.24", "--alpha", "0.1",
                 "--n", "21", "--out", str(dest), "--quiet"])
    assert code == 0
    assert capsys.readouterr().out == ""
    raw = dest.read_bytes().decode()
    lines = raw.split("\r\n")
    assert lines[0] == "sigma,theta,u,Z,y,pi,dZdsigma"
    assert len(lines) == 23 and lines[-1] == ""
    first = lines[1].split(",")
    assert float(first[0]) == -15.0
    assert main(["soliton-profile", "--v", "0.24", "--alpha", "0.1",
                 "--n", "5"]) == 0
    assert capsys.readouterr().out.startswith("sigma,theta,u,Z,y,pi,dZdsigma\r\n")


def test_bilinear_command(capsys):
    code, obj = run_json(capsys, ["bilinear", "--v", "0.24", "--alpha", "0.1"])
    assert code == 0
    assert [r["variant"] for r in obj["reports"]] == ["squared-alpha", "linear-alpha"]
    assert obj["reports"][0]["line2_linf"] == pytest.approx(LINE2_NORMALIZED, rel=1e-5)
    code, obj = run_json(capsys, ["bilinear", "--v", "0.24", "--alpha", "0.1",
                                  "--variant", "squared"])
    assert [r["variant"] for r in obj["reports"]] == ["squared-alpha"]


GRID_SMALL = ["--sigma-min", "-10", "--sigma-max", "10", "--n-sigma", "61",
              "--tau-min", "-10", "--tau-max", "10", "--n-tau", "61"]


def test_verify_coupled_with_point(capsys):
    code, obj = run_json(capsys, ["verify", "--system", "coupled", "--v", "0",
                                  "--alpha", "0", "--method", "all",
                                  "--point", "0", "0"] + GRID_SMALL)
    assert code == 0
    assert obj["system"] == "coupled"
    assert len(obj["reports"]) == 3
    assert [e["equation"] for e in obj["reports"][0]["equations"]] == ["u", "Z"]
    for m in ("analytic", "fd2", "fd4"):
        assert obj["point"]["residuals"][m]["r1"] == pytest.approx(-0.5, abs=1e-10)
        assert obj["point"]["residuals"][m]["r2"] == pytest.approx(1.0, abs=1e-10)


def test_verify_factored_and_complex(capsys):
    code, obj = run_json(capsys, ["verify", "--system", "14"] + GRID_SMALL)
    assert code == 0
    assert obj["system"] == "factored"
    assert obj["reports"][0]["equations"][0]["equation"] == "u-factored"
    code, obj = run_json(capsys, ["verify", "--system", "complex", "--k-re", "1.0",
                                  "--k-im", "0.5", "--alpha", "0.1"] + GRID_SMALL)
    assert code == 0
    assert obj["dispersion_residual"] < 1e-12
    eqs = {e["equation"]: e["linf"] for e in obj["reports"][0]["equations"]}
    assert set(eqs) == {"Q_re", "Q_im", "Z"}
    assert eqs["Z"] < 1e-12


def test_verify_physical(capsys):
    code, obj = run_json(capsys, ["verify", "--system", "physical", "--v", "0.24",
                                  "--alpha", "0.8"])
    assert code == 0
    assert obj["system"] == "physical"
    assert obj["reports"][0]["equations"][0]["linf"] == pytest.approx(1.6805032,
                                                                      abs=1e-3)


def test_medium_command_and_config_route(tmp_path, capsys):
    argv = ["medium", "--tau", "2", "--v_e", "0.75", "--v_f", "1.5",
            "--reduction", "swsp"]
    code, obj = run_json(capsys, argv)
    assert code == 0
    assert obj["high_freq"]["beta_f"] == pytest.approx(1.0, abs=1e-15)
    assert obj["low_freq"]["beta_e"] == pytest.approx(0.421875, abs=1e-15)
    expected = reduce_swsp(MediumParams(tau=2.0, v_e=0.75, v_f=1.5))
    assert obj["reduction"] == "swsp"
    assert obj["reduced"]["alpha"] == pytest.approx(expected.alpha, abs=1e-15)
    cfgfile = tmp_path / "medium.cfg"
    cfgfile.write_text("tau = 2\nv_e = 0.75\nv_f = 1.5\n")
    code2, obj2 = run_json(capsys, ["medium", "--config", str(cfgfile),
                                    "--reduction", "swsp"])
    assert code2 == 0
    assert obj2 == obj


def test_simulate_coupled_artifacts(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("v = 0.24\nalpha = 0.8\nn = 61\nT = 0.2\ndt = 0.1\n"
                   "n_snapshots = 3\nforcing = exactness\n")
    out = tmp_path / "run19"
    code = main(["simulate", "--system", "19", "--config", str(cfg),
                 "--out", str(out), "--quiet"])
    assert code == 0
    manifest = json.loads((out / "run_manifest.json").read_text())
    assert manifest["system"] == "19"
    assert manifest["params"]["n"] == 61
    assert manifest["params"]["forcing"] == "exactness"
    assert len(manifest["snapshots"]) == 3
    for snap in manifest["snapshots"]:
        f = out / snap["file"]
        assert f.exists()
        assert f.read_bytes().split(b"\r\n")[0] == b"sigma,u,ut,Z,zt"
        assert snap["drift_u_linf"] < 1e-4


def test_simulate_mkdvb_artifacts(tmp_path):
    cfg = tmp_path / "mk.cfg"
    cfg.write_text("n = 32\nT = 0.01\ndt = 0.005\nn_snapshots = 2\nic = sine\n")
    out = tmp_path / "runmk"
    code = main(["simulate", "--system", "mkdvb", "--config", str(cfg),
                 "--out", str(out), "--quiet"])
    assert code == 0
    manifest = json.loads((out / "run_manifest.json").read_text())
    assert manifest["system"] == "mkdvb"
    assert len(manifest["snapshots"]) == 2
    snap = out / "snapshot_001.csv"
    assert snap.read_bytes().split(b"\r\n")[0] == b"x,p"


def read_tree(root):
    return {p.name: p.read_bytes() for p in sorted(root.iterdir())}


def test_figure_default_panels_and_determinism(tmp_path):
    d1, d2 = tmp_path / "fig1", tmp_path / "fig2"
    for d in (d1, d2):
        assert main(["figure", "--out", str(d), "--n", "101", "--quiet"]) == 0
    manifest = json.loads((d1 / "figure_manifest.json").read_text())
    assert [p["class"] for p in manifest["panels"]] == ["cusp", "loop", "kink"]
    assert [p["momentum_shape"] for p in manifest["panels"]] == \
        ["cusp-like", "loop-like", "hump-like"]
    names = {p.name for p in d1.iterdir()}
    for i in (1, 2, 3):
        assert f"curve_{i:02d}_u.csv" in names
        assert f"curve_{i:02d}_pi.csv" in names
    assert read_tree(d1) == read_tree(d2)


def test_figure_svg_and_alpha_tokens(tmp_path):
    out = tmp_path / "figsvg"
    code = main(["figure", "--out", str(out), "--n", "51", "--format", "svg",
                 "--alphas", "critical, 0.8", "--quiet"])
    assert code == 0
    manifest = json.loads((out / "figure_manifest.json").read_text())
    assert [p["class"] for p in manifest["panels"]] == ["cusp", "kink"]
    assert (out / "curve_01_u.svg").exists()
    assert (out / "curve_02_pi.svg").exists()


def test_run_report_structure_and_determinism(tmp_path):
    cfg = tmp_path / "report.cfg"
    cfg.write_text("n_samples = 5\nalphas = 0.1\n")
    outs = []
    for name in ("r1.json", "r2.json"):
        dest = tmp_path / name
        code = main(["run-report", "--config", str(cfg), "--out", str(dest),
                     "--quiet"])
        assert code == 0
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]
    report = json.loads(outs[0])
    assert report["schema_version"] == 1
    assert report["selftest"]["passed"] is True
    assert report["property_samples"]["n"] == 5
    assert report["property_samples"]["max_real_dispersion_residual"] < 1e-12
    entry = report["entries"][0]
    assert entry["classification"]["class"] == "loop"
    assert len(entry["bilinear"]) == 2
    assert set(entry["verify"]) == {"coupled", "factored"}


def test_run_report_flags_domain_failures(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("n_samples = 2\nalphas = 0.1, -1\n")
    code, report = run_json(capsys, ["run-report", "--config", str(cfg)])
    assert code == 2
    assert "error" in report["entries"][1]
    assert report["entries"][1]["error"]["type"] == "DomainError"


def test_exit_codes(tmp_path, capsys):
    assert main(["dispersion", "--v", "2", "--alpha", "0.1"]) == 2
    assert "error" in capsys.readouterr().err
    missing = tmp_path / "no" / "dir" / "x.txt"
    assert main(["critical-alpha", "--v", "0.5", "--out", str(missing)]) == 4
    assert "i/o error" in capsys.readouterr().err
