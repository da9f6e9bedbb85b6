"""Generating sequences g(j) of Hankel matrices, as sums of named terms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .._validation import check_positive

_UNIT_TOL = 1e-12


def _root_of_unity_power(zeta: complex, j):
    """Exact zeta^{-j} when zeta is one of 1, i, -1, -i; otherwise via its argument."""
    for q, w in enumerate((1, 1j, -1, -1j)):
        if abs(zeta - w) < _UNIT_TOL:
            # w^{-j} = i^{-q j}
            table = np.array([1, -1j, -1, 1j])
            out = table[(q * j) % 4]
            return out.real if q % 2 == 0 else out
    return np.exp(-1j * np.angle(zeta) * j)


@dataclass(frozen=True)
class LogPowerSeq:
    """kappa j^-1 (log j)^-alpha zeta^-j for j >= 2, and 0 for j in {0, 1}."""

    kappa: complex
    alpha: float
    zeta: complex = 1.0

    def __post_init__(self):
        check_positive(self.alpha, "alpha")
        if abs(abs(self.zeta) - 1.0) > _UNIT_TOL:
            raise ValueError(f"zeta must lie on the unit circle, got |zeta| = {abs(self.zeta)}")

    def __call__(self, j):
        base = np.zeros(j.shape)
        big = j >= 2
        jb = j[big].astype(float)
        base[big] = 1.0 / (jb * np.log(jb) ** self.alpha)
        return self.kappa * base * _root_of_unity_power(self.zeta, j)


@dataclass(frozen=True)
class PowerSeq:
    """(j + 1)^-gamma with gamma > 1."""

    gamma: float

    def __post_init__(self):
        if not self.gamma > 1:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")

    def __call__(self, j):
        return (j + 1.0) ** (-self.gamma)


@dataclass(frozen=True)
class MomentSeq:
    """Moments g(j) = int eta(mu) mu^j dmu of a sigma specification."""

    sigma: Any
    quadrature: Any = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, j):
        from ..transforms.moments import moments_from_eta

        jmax = int(j.max()) if j.size else 0
        have = self._cache.get("g")
        if have is None or len(have) <= jmax:
            self._cache["g"] = moments_from_eta(self.sigma, max(jmax, 1), self.quadrature)
        return self._cache["g"][j]


@dataclass(frozen=True)
class TabulatedSeq:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __call__(self, j):
        vals = np.asarray(self.values)
        if j.size and j.max() >= len(vals):
            raise IndexError(f"tabulated sequence has {len(vals)} values, index {j.max()} requested")
        return vals[j]


SEQUENCE_TERMS = {
    "LogPower": LogPowerSeq,
    "Power": PowerSeq,
    "Moment": MomentSeq,
    "Tabulated": TabulatedSeq,
}


@dataclass(frozen=True)
class SequenceSpec:
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __call__(self, j):
        return eval_sequence(self, j)


def eval_sequence(spec: SequenceSpec, j):
    """Evaluate g(j) for integer ``j >= 0`` (scalar or array)."""
    j_arr = np.asarray(j)
    if not np.issubdtype(j_arr.dtype, np.integer):
        if np.any(j_arr != np.round(j_arr)):
            raise TypeError("sequence index must be integer")
        j_arr = j_arr.astype(np.int64)
    if np.any(j_arr < 0):
        raise ValueError("sequence index must be >= 0")
    flat = np.atleast_1d(j_arr).ravel()
    total = np.zeros(flat.shape)
    for term in spec.terms:
        total = total + term(flat)
    total = total.reshape(j_arr.shape)
    return total if total.ndim else total[()]


def _complex(x):
    return complex(*x) if isinstance(x, (list, tuple)) else x


def sequence_from_config(cfg) -> SequenceSpec:
    """Build a ``SequenceSpec`` from ``{"terms": [{"type": ..., **fields}, ...]}``.

    Complex numbers are written as ``[re, im]``.  A ``Moment`` term carries a
    ``sigma`` sub-config understood by :func:`sigma_from_config`.
    """
    from .sigma import sigma_from_config

    items = cfg["terms"] if isinstance(cfg, dict) else cfg
    terms = []
    for item in items:
        item = dict(item)
        kind = item.pop("type", None)
        if kind not in SEQUENCE_TERMS:
            raise ValueError(f"unknown sequence term type {kind!r}")
        for key in ("kappa", "zeta"):
            if key in item:
                item[key] = _complex(item[key])
        if kind == "Moment":
            item["sigma"] = sigma_from_config(item["sigma"])
        if kind == "Tabulated":
            item["values"] = tuple(_complex(v) for v in item["values"])
        terms.append(SEQUENCE_TERMS[kind](**item))
    return SequenceSpec(tuple(terms))
