"""Artifacts of a run: CSV spectra, JSON fits and reports, Markdown summaries, plot data."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .config import ExperimentConfig
from .experiments import Outcome


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, np.generic):
        return _jsonable(obj.item())
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def dump_json(obj, path):
    Path(path).write_text(json.dumps(_jsonable(obj), indent=2, sort_keys=True) + "\n")


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def markdown_table(rows):
    if not rows:
        return "(no rows)\n"
    cols = list(rows[0])
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(_fmt(r.get(c)) for c in cols) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def write_table_csv(rows, path):
    if not rows:
        Path(path).write_text("")
        return
    with Path(path).open("w", newline="") as fh:
        wr = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        wr.writeheader()
        for r in rows:
            wr.writerow({k: ("" if v is None else repr(float(v)) if isinstance(v, (float, np.floating)) else v)
                         for k, v in r.items()})


def build_report(cfg: ExperimentConfig, outcome: Outcome | None, error=None, stage=None):
    """Dictionary persisted as report.json; the pass flag is recomputed from the stored checks."""
    rep = {"id": cfg.id, "kind": cfg.kind, "description": cfg.description, "config": cfg.to_dict()}
    if outcome is not None:
        rep["checks"] = [c.to_dict() for c in outcome.checks]
        rep["fits"] = {br: f.to_dict() for br, f in outcome.fits.items()}
        rep["law"] = outcome.law.to_dict() if outcome.law is not None else None
        rep["timings"] = outcome.timings
        rep["refinement"] = outcome.refinement
        rep["notes"] = outcome.notes
        rep["spectrum_file"] = "spectrum.csv" if outcome.spectrum is not None else None
    if error is not None:
        rep["error"] = str(error)
        rep["failed_stage"] = stage
    checks = rep.get("checks", [])
    rep["passed"] = error is None and all(c["passed"] for c in checks)
    return rep


def summary_markdown(cfg, rep, outcome: Outcome | None):
    status = "PASS" if rep["passed"] else "FAIL"
    lines = [f"# {cfg.id}: {status}", ""]
    if cfg.description:
        lines += [cfg.description, ""]
    if "error" in rep:
        lines += [f"**Error** in stage `{rep['failed_stage']}`: {rep['error']}", ""]
    if rep.get("checks"):
        lines += ["## Checks", "", markdown_table([{"check": c["name"], "value": c["value"], "bound": c["bound"],
                                                   "result": "pass" if c["passed"] else "FAIL"}
                                                  for c in rep["checks"]])]
    if outcome is not None:
        for name, rows in outcome.tables.items():
            lines += [f"## {name}", "", markdown_table(rows)]
        if outcome.fits:
            lines += ["## Fits", "", markdown_table([
                {"branch": br, "exponent": f.exponent, "coef": f.coef, "window": list(f.window),
                 "extrapolated (1/log n -> 0)": f.extrapolated_coef, "drift slope": f.drift_slope,
                 "predicted": f.predicted_coef, "family": f.suggested_family} for br, f in outcome.fits.items()])]
        if outcome.refinement:
            lines += ["## Refinement", "", markdown_table([{"branch": k, "max relative change": v}
                                                            for k, v in outcome.refinement.items()])]
        for note in outcome.notes:
            lines.append(f"- {note}")
        if outcome.timings:
            lines += ["", "Timings (s): " + ", ".join(f"{k} {v:.2f}" for k, v in outcome.timings.items())]
    return "\n".join(lines) + "\n"


def write_plot_data(outcome: Outcome, out_dir: Path):
    """Whitespace-separated columns readable by gnuplot."""
    if outcome.spectrum is not None:
        alpha = outcome.law.exponent if outcome.law is not None and outcome.law.family != "widom" else 1.0
        for br, name in (("+", "plus"), ("-", "minus"), ("s", "singular")):
            vals = outcome.spectrum.branch(br)
            if vals.size:
                n = np.arange(1, vals.size + 1)
                np.savetxt(out_dir / f"spectrum_{name}.dat", np.column_stack([n, vals, n ** alpha * vals]),
                           header=f"n value n^{alpha:g}*value", fmt="%.17g")
    for name, rows in outcome.tables.items():
        if rows and all(isinstance(v, (int, float)) or v is None for v in rows[0].values()):
            cols = list(rows[0])
            data = np.array([[np.nan if r.get(c) is None else r[c] for c in cols] for r in rows], dtype=float)
            np.savetxt(out_dir / f"{name}.dat", data, header=" ".join(c.replace(" ", "_") for c in cols), fmt="%.17g")


def write_artifacts(cfg, outcome, out_dir, error=None, stage=None, emit_plots=False):
    """Write everything available; partial outcomes of a crashed run are kept."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rep = build_report(cfg, outcome, error, stage)
    if outcome is not None:
        if outcome.spectrum is not None:
            outcome.spectrum.to_csv(out_dir / "spectrum.csv")
        if outcome.fits:
            dump_json({br: f.to_dict() for br, f in outcome.fits.items()}, out_dir / "fit.json")
        for name, rows in outcome.tables.items():
            write_table_csv(rows, out_dir / f"{name}.csv")
        if emit_plots:
            write_plot_data(outcome, out_dir)
    dump_json(rep, out_dir / "report.json")
    (out_dir / "summary.md").write_text(summary_markdown(cfg, rep, outcome))
    return rep


def write_suite(reports, out_dir):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    passed = all(r["passed"] for r in reports)
    dump_json({"passed": passed, "experiments": [{"id": r["id"], "passed": r["passed"],
                                                  "failed_stage": r.get("failed_stage")} for r in reports]},
              out_dir / "suite.json")
    rows = []
    for r in reports:
        failing = [c["name"] for c in r.get("checks", []) if not c["passed"]]
        if "error" in r:
            failing.append(f"error in stage {r['failed_stage']}")
        rows.append({"experiment": r["id"], "result": "PASS" if r["passed"] else "FAIL",
                     "checks": len(r.get("checks", [])), "failing": "; ".join(failing)})
    text = f"# Suite: {'PASS' if passed else 'FAIL'}\n\n" + markdown_table(rows)
    (out_dir / "suite.md").write_text(text)
    return passed
