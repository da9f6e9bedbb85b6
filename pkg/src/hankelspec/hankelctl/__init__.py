"""Experiment harness: configs, runners, artifacts and the ``hankelctl`` command."""

from .config import ConfigError, ExperimentConfig, load_config, load_manifest, preset_dir, validate_config
from .experiments import Check, Context, ExperimentError, Outcome, build_law, run_experiment
from .main import execute, main, representation_config

__all__ = [
    "Check", "ConfigError", "Context", "ExperimentConfig", "ExperimentError", "Outcome", "build_law", "execute",
    "load_config", "load_manifest", "main", "preset_dir", "representation_config", "run_experiment",
    "validate_config",
]
