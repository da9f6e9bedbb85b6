"""hankelctl: run spectral experiments from JSON configs and check them against closed-form laws."""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
import traceback
from pathlib import Path

from .config import ConfigError, ExperimentConfig, load_config, load_manifest, resolve_config_path
from .experiments import Context, ExperimentError, refinement_deltas, run_experiment
from .report import write_artifacts, write_suite

log = logging.getLogger("hankelctl")


def execute(cfg: ExperimentConfig, out_dir, seed=0, refine=1.0, emit_plots=False):
    """Run one experiment and write its artifacts; never raises for module errors."""
    out_dir = Path(out_dir)
    outcome, error, stage = None, None, None
    try:
        if refine != 1.0:
            base = run_experiment(cfg, Context(seed=seed))
            outcome = run_experiment(cfg, Context(seed=seed, refine=refine))
            outcome.refinement = refinement_deltas(base, outcome)
            outcome.notes.append(f"gates evaluated at refinement factor {refine:g}")
        else:
            outcome = run_experiment(cfg, Context(seed=seed))
    except ExperimentError as exc:
        error, stage = exc.original, exc.stage
        log.debug("".join(traceback.format_exception(exc.original)))
    except Exception as exc:  # crash isolation: report, keep going
        error, stage = exc, "setup"
        log.debug(traceback.format_exc())
    return write_artifacts(cfg, outcome, out_dir, error, stage, emit_plots)


def representation_config(cfg: ExperimentConfig) -> ExperimentConfig:
    """Turn any config naming a bounded sigma into a Hankel-matrix vs ΨDO comparison."""
    if cfg.kind == "representation":
        return cfg
    sigma = cfg.operator.get("sigma")
    if sigma is None:
        raise ConfigError("operator.sigma", "compare needs a sigma specification")
    return dataclasses.replace(cfg, id=f"{cfg.id}-compare", kind="representation",
                               operator={"sigmas": [sigma], "vector_sigmas": [sigma]},
                               tolerances={k: v for k, v in cfg.tolerances.items()
                                           if k in ("top_k_relative", "vector_relative")})


def _print_report(rep):
    status = "PASS" if rep["passed"] else "FAIL"
    print(f"[{status}] {rep['id']}")
    for c in rep.get("checks", []):
        print(f"    {'ok  ' if c['passed'] else 'FAIL'} {c['name']}: {c['value']} (bound {c['bound']})")
    if "error" in rep:
        print(f"    error in stage '{rep['failed_stage']}': {rep['error']}")


def build_parser():
    p = argparse.ArgumentParser(prog="hankelctl", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, target, help_ in (("run", "config", "run one experiment"),
                                ("suite", "manifest", "run every experiment of a manifest"),
                                ("compare", "config", "compare Hankel-matrix and ΨDO representations")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument(target, help="path or shipped preset name")
        sp.add_argument("--out", default="hankelctl-out", help="output directory")
        sp.add_argument("--refine", type=float, default=1.0, help="scale N and M by this factor")
        sp.add_argument("--seed", type=int, default=0, help="seed of the Lanczos start vector")
        sp.add_argument("--emit-plots", action="store_true", help="also write gnuplot .dat files")
        sp.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if args.refine <= 0:
        print("error: --refine must be positive", file=sys.stderr)
        return 2
    out = Path(args.out)
    try:
        if args.command == "suite":
            configs = load_manifest(resolve_config_path(args.manifest))
        else:
            cfg = load_config(resolve_config_path(args.config))
            configs = [representation_config(cfg) if args.command == "compare" else cfg]
    except ConfigError as exc:
        print(f"config error: field '{exc.field}': {exc.message}", file=sys.stderr)
        return 2
    reports = []
    for cfg in configs:
        target = out / (cfg.output or cfg.id) if args.command == "suite" or len(configs) > 1 else out
        rep = execute(cfg, target, args.seed, args.refine, args.emit_plots)
        _print_report(rep)
        reports.append(rep)
    if args.command == "suite":
        passed = write_suite(reports, out)
    else:
        passed = all(r["passed"] for r in reports)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
