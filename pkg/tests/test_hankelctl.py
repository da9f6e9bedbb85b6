import json
import subprocess
import sys

import pytest

from hankelspec.hankelctl import (ConfigError, ExperimentConfig, execute, load_config, load_manifest, main,
                                  preset_dir, representation_config, validate_config)

JUMP = {
    "id": "jump-small",
    "kind": "spectrum",
    "operator": {"type": "kernel", "kernel": {"terms": [{"type": "Jump", "h0": 1.0, "l": 0, "t0": 1.0}]}},
    "discretization": {"T": 1.0, "M": 800},
    "solver": {"method": "dense"},
    "law": {"family": "jump", "h0": 1.0, "l": 0, "t0": 1.0},
    "tolerances": {"window": [30, 80], "relative": 0.05, "branch_agreement": 0.03},
}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return p


def variant(**changes):
    cfg = json.loads(json.dumps(JUMP))
    cfg.update(changes)
    return cfg


# configuration -------------------------------------------------------------------


def test_presets_validate():
    for p in sorted(preset_dir().glob("*.json")):
        raw = json.loads(p.read_text())
        if "experiments" in raw:
            assert load_manifest(p)
        else:
            assert load_config(p).id == raw["id"]


@pytest.mark.parametrize("mutate, field", [
    (lambda c: c["operator"].pop("type"), "operator.type"),
    (lambda c: c.update(colour="red"), "colour"),
    (lambda c: c["tolerances"].update(relative=-0.1), "tolerances.relative"),
    (lambda c: c["discretization"].pop("M"), "discretization.M"),
    (lambda c: c.update(kind="magic"), "kind"),
    (lambda c: c["solver"].update(k=0), "solver.k"),
    (lambda c: c["law"].update(family="exotic"), "law.family"),
])
def test_config_error_names_field(mutate, field):
    cfg = variant()
    mutate(cfg)
    with pytest.raises(ConfigError) as err:
        validate_config(cfg)
    assert err.value.field == field


def test_cli_config_error(tmp_path, capsys):
    cfg = variant()
    cfg["discretization"]["T"] = 0
    code = main(["run", str(write(tmp_path, "bad.json", cfg)), "--out", str(tmp_path / "out")])
    assert code == 2
    assert "discretization.T" in capsys.readouterr().err


def test_cli_bad_json(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{ not json")
    assert main(["run", str(p), "--out", str(tmp_path / "o")]) == 2
    assert "invalid JSON" in capsys.readouterr().err


def test_manifest_inline_error_is_located(tmp_path):
    bad = variant()
    bad["solver"]["method"] = "qr"
    p = write(tmp_path, "m.json", {"experiments": [variant(), bad]})
    with pytest.raises(ConfigError) as err:
        load_manifest(p)
    assert err.value.field == "experiments[1].solver.method"


def test_manifest_duplicate_ids(tmp_path):
    with pytest.raises(ConfigError):
        load_manifest(write(tmp_path, "m.json", {"experiments": [variant(), variant()]}))


# run -------------------------------------------------------------------------------


def test_run_writes_artifacts(tmp_path):
    out = tmp_path / "run"
    code = main(["run", str(write(tmp_path, "c.json", JUMP)), "--out", str(out)])
    rep = json.loads((out / "report.json").read_text())
    assert code == 0 and rep["passed"]
    for name in ("spectrum.csv", "fit.json", "summary.csv", "summary.md"):
        assert (out / name).exists()
    header = (out / "summary.csv").read_text().splitlines()[0].split(",")
    assert header[:4] == ["n", "lambda_plus", "lambda_minus", "s_n"]
    assert {"a_plus", "a_minus"} <= set(header)
    # pass/fail is reproducible from the persisted numbers
    assert rep["passed"] == all(c["passed"] for c in rep["checks"])
    assert "PASS" in (out / "summary.md").read_text().splitlines()[0]


def test_run_preset_by_name(tmp_path):
    assert main(["run", "constants", "--out", str(tmp_path)]) == 0


def test_run_is_deterministic(tmp_path):
    cfg = variant(solver={"method": "lanczos", "k": 30})
    p = write(tmp_path, "c.json", cfg)
    for d in ("a", "b"):
        main(["run", str(p), "--out", str(tmp_path / d), "--seed", "3"])
    assert (tmp_path / "a" / "spectrum.csv").read_bytes() == (tmp_path / "b" / "spectrum.csv").read_bytes()
    assert (tmp_path / "a" / "summary.csv").read_bytes() == (tmp_path / "b" / "summary.csv").read_bytes()


def test_refine_and_plots(tmp_path):
    out = tmp_path / "r"
    main(["run", str(write(tmp_path, "c.json", JUMP)), "--out", str(out), "--refine", "2", "--emit-plots"])
    rep = json.loads((out / "report.json").read_text())
    assert rep["refinement"] and all(v < 0.05 for v in rep["refinement"].values())
    assert any("refinement factor 2" in n for n in rep["notes"])
    assert (out / "spectrum_plus.dat").exists() and (out / "spectrum_minus.dat").exists()
    assert "Refinement" in (out / "summary.md").read_text()


def test_refine_must_be_positive(tmp_path):
    assert main(["run", "constants", "--out", str(tmp_path), "--refine", "0"]) == 2


def test_failing_gate_exit_status(tmp_path):
    cfg = variant(tolerances={"window": [30, 80], "relative": 1e-9})
    out = tmp_path / "f"
    assert main(["run", str(write(tmp_path, "c.json", cfg)), "--out", str(out)]) == 1
    assert (out / "spectrum.csv").exists()
    assert "FAIL" in (out / "summary.md").read_text()


# suite -------------------------------------------------------------------------------


def test_empty_manifest_passes(tmp_path):
    out = tmp_path / "s"
    assert main(["suite", str(write(tmp_path, "m.json", {"experiments": []})), "--out", str(out)]) == 0
    assert json.loads((out / "suite.json").read_text()) == {"experiments": [], "passed": True}


def test_suite_failure_and_crash_isolation(tmp_path):
    failing = variant(id="too-tight", tolerances={"window": [30, 80], "relative": 1e-9})
    crashing = {"id": "crash", "kind": "spectrum",
                "operator": {"type": "sequence", "sequence": {"terms": [{"type": "Power", "gamma": 0.5}]}},
                "discretization": {"N": 64}}
    manifest = {"experiments": [variant(id="good"), failing, crashing]}
    out = tmp_path / "s"
    assert main(["suite", str(write(tmp_path, "m.json", manifest)), "--out", str(out)]) == 1
    suite = json.loads((out / "suite.json").read_text())
    assert [e["passed"] for e in suite["experiments"]] == [True, False, False]
    good = json.loads((out / "good" / "report.json").read_text())
    assert good["passed"] and (out / "good" / "spectrum.csv").exists()
    assert (out / "too-tight" / "spectrum.csv").exists()
    crash = json.loads((out / "crash" / "report.json").read_text())
    assert crash["failed_stage"] == "build" and "gamma" in crash["error"]
    assert "error in stage build" in (out / "suite.md").read_text()


def test_execute_isolates_unexpected_errors(tmp_path):
    cfg = ExperimentConfig("odd", "spectrum", {"type": "kernel", "kernel": {"terms": [{"type": "Nope"}]}},
                           {"T": 1.0, "M": 10})
    rep = execute(cfg, tmp_path)
    assert not rep["passed"] and rep["failed_stage"]
    assert (tmp_path / "report.json").exists()


# compare ------------------------------------------------------------------------------


def test_representation_config():
    cfg = validate_config({"id": "s", "kind": "spectrum",
                           "operator": {"type": "sigma-moments", "sigma": {"model": "constant", "c": 1.0}},
                           "discretization": {"N": 64}})
    rc = representation_config(cfg)
    assert rc.kind == "representation" and rc.operator["sigmas"] == [{"model": "constant", "c": 1.0}]
    with pytest.raises(ConfigError):
        representation_config(validate_config(JUMP))


def test_compare_small(tmp_path):
    cfg = {"id": "sig", "kind": "spectrum",
           "operator": {"type": "sigma-moments",
                        "sigma": {"model": "sigma_star", "alpha": 1.0, "kappa_zero": 1.0, "kappa_inf": 1.0}},
           "discretization": {"N": 256, "X": 24, "M": 512, "grid_X": 40, "grid_M": 1024},
           "solver": {"k": 5}, "tolerances": {"vector_relative": 1e-3}}
    out = tmp_path / "c"
    code = main(["compare", str(write(tmp_path, "c.json", cfg)), "--out", str(out)])
    rep = json.loads((out / "report.json").read_text())
    assert rep["kind"] == "representation" and len(rep["checks"]) == 2
    assert rep["checks"][1]["passed"]
    assert code == (0 if rep["passed"] else 1)
    assert (out / "top_k.csv").exists()


def test_psido_companion_manifest_passes(tmp_path):
    assert main(["suite", "psido-laws", "--out", str(tmp_path)]) == 0


def test_console_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "hankelspec.hankelctl", "run", "constants", "--out",
                        str(tmp_path)], capture_output=True, text=True)
    assert r.returncode == 0 and "[PASS] constants" in r.stdout
