"""Experiment configuration files (JSON) and their validation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

KINDS = ("spectrum", "hilbert-norm", "twist", "widom", "carleman", "representation", "roundtrip",
         "matvec-benchmark", "constants")
OPERATOR_TYPES = ("kernel", "sequence", "sigma-moments", "sigma-psido", "carleman-psido")
LAW_FAMILIES = ("jump", "kernel", "sequence", "oscillatory-singular", "oscillatory-sequence",
                "oscillatory-kernel", "widom")


class ConfigError(ValueError):
    """Malformed configuration; ``field`` names the offending entry."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


@dataclass
class ExperimentConfig:
    id: str
    kind: str
    operator: dict = field(default_factory=dict)
    discretization: dict = field(default_factory=dict)
    solver: dict = field(default_factory=dict)
    law: dict | None = None
    tolerances: dict = field(default_factory=dict)
    output: str | None = None
    description: str = ""
    source: str | None = None

    def to_dict(self):
        return {k: v for k, v in self.__dict__.items() if k != "source"}


def _require(cond, fld, msg):
    if not cond:
        raise ConfigError(fld, msg)


SIGNED_KEYS = {"slope"}  # brackets on quantities that are negative by nature


def _positive_numbers(d, prefix):
    for key, val in d.items():
        fld = f"{prefix}.{key}"
        if isinstance(val, bool) or key in SIGNED_KEYS:
            continue
        if isinstance(val, (int, float)):
            _require(val > 0, fld, f"must be positive, got {val}")
        elif isinstance(val, list) and val and all(isinstance(v, (int, float)) for v in val):
            _require(all(v > 0 for v in val), fld, "entries must be positive")
        elif isinstance(val, dict):
            _positive_numbers(val, fld)


def validate_config(raw: dict, source=None) -> ExperimentConfig:
    _require(isinstance(raw, dict), "<root>", "config must be a JSON object")
    known = {"id", "kind", "operator", "discretization", "solver", "law", "tolerances", "output", "description"}
    for key in raw:
        _require(key in known, key, "unknown field")
    _require(isinstance(raw.get("id"), str) and raw["id"], "id", "must be a non-empty string")
    _require(raw.get("kind") in KINDS, "kind", f"must be one of {list(KINDS)}")
    for key in ("operator", "discretization", "solver", "tolerances"):
        _require(isinstance(raw.get(key, {}), dict), key, "must be an object")
    op = raw.get("operator", {})
    if raw["kind"] == "spectrum":
        _require(op.get("type") in OPERATOR_TYPES, "operator.type", f"must be one of {list(OPERATOR_TYPES)}")
        need = {"kernel": "kernel", "sequence": "sequence", "sigma-moments": "sigma", "sigma-psido": "sigma",
                "carleman-psido": "p"}[op["type"]]
        _require(need in op, f"operator.{need}", "missing")
        disc = raw.get("discretization", {})
        for key in {"kernel": ("T", "M"), "sequence": ("N",), "sigma-moments": ("N",), "sigma-psido": ("X", "M"),
                    "carleman-psido": ("X", "M")}[op["type"]]:
            _require(key in disc or key in op, f"discretization.{key}", "missing")
    solver = raw.get("solver", {})
    if "method" in solver:
        _require(solver["method"] in ("dense", "lanczos", "auto"), "solver.method",
                 "must be 'dense', 'lanczos' or 'auto'")
    if "k" in solver:
        _require(isinstance(solver["k"], int) and solver["k"] >= 1, "solver.k", "must be a positive integer")
    law = raw.get("law")
    if law is not None:
        _require(isinstance(law, dict), "law", "must be an object or null")
        _require(law.get("family") in LAW_FAMILIES, "law.family", f"must be one of {list(LAW_FAMILIES)}")
    _positive_numbers(raw.get("tolerances", {}), "tolerances")
    _positive_numbers(raw.get("discretization", {}), "discretization")
    return ExperimentConfig(raw["id"], raw["kind"], op, raw.get("discretization", {}), solver, law,
                            raw.get("tolerances", {}), raw.get("output"), raw.get("description", ""),
                            str(source) if source else None)


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise ConfigError("<file>", f"{path} not found") from None
    except json.JSONDecodeError as exc:
        raise ConfigError("<file>", f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return validate_config(raw, path)


def load_manifest(path) -> list[ExperimentConfig]:
    """A manifest is ``{"experiments": [path-or-inline-config, ...]}``; paths are relative to it."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise ConfigError("<file>", f"{path} not found") from None
    except json.JSONDecodeError as exc:
        raise ConfigError("<file>", f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    _require(isinstance(raw, dict) and isinstance(raw.get("experiments", []), list), "experiments",
             "manifest must hold an 'experiments' list")
    configs = []
    for i, item in enumerate(raw.get("experiments", [])):
        if isinstance(item, str):
            configs.append(load_config(path.parent / item))
        else:
            try:
                configs.append(validate_config(item, path))
            except ConfigError as exc:
                raise ConfigError(f"experiments[{i}].{exc.field}", exc.message) from None
    ids = [c.id for c in configs]
    dup = {i for i in ids if ids.count(i) > 1}
    _require(not dup, "experiments", f"duplicate ids {sorted(dup)}")
    return configs


def preset_dir() -> Path:
    return Path(__file__).parent / "presets"


def resolve_config_path(name) -> Path:
    """Accept a path or the name of a shipped preset (with or without .json)."""
    p = Path(name)
    if p.exists():
        return p
    cand = preset_dir() / (name if name.endswith(".json") else f"{name}.json")
    return cand if cand.exists() else p
