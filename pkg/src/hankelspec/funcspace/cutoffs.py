"""Smooth plateau cutoffs near t = 0 and t = infinity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _flat(x, sharpness):
    # exp(-c/x) for x > 0, exactly zero otherwise
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-sharpness / x[pos])
    return out


def smooth_step(x, sharpness=1.0):
    """C-infinity step: exactly 0 for ``x <= 0`` and exactly 1 for ``x >= 1``.

    Built from the mollifier psi(x) = exp(-c/x) as psi(x) / (psi(x) + psi(1 - x)).
    """
    x = np.asarray(x, dtype=float)
    a = _flat(x, sharpness)
    b = _flat(1.0 - x, sharpness)
    out = np.where(x >= 1.0, 1.0, 0.0)
    mid = (x > 0) & (x < 1)
    out[mid] = a[mid] / (a[mid] + b[mid])
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class CutoffConfig:
    """Plateau cutoffs chi_0 (1 near zero) and chi_inf (1 near infinity).

    chi_0 equals 1 on (0, zero_plateau[0]] and 0 on [zero_plateau[1], inf);
    chi_inf equals 0 on (0, infinity_plateau[0]] and 1 on [infinity_plateau[1], inf).
    """

    zero_plateau: tuple[float, float] = (0.25, 0.5)
    infinity_plateau: tuple[float, float] = (2.0, 4.0)
    sharpness: float = 1.0

    def __post_init__(self):
        a, b = self.zero_plateau
        c, d = self.infinity_plateau
        if not (0 < a < b and 0 < c < d):
            raise ValueError("plateau intervals must be increasing and positive")
        if self.sharpness <= 0:
            raise ValueError("sharpness must be positive")

    def chi_zero(self, t):
        a, b = self.zero_plateau
        return smooth_step((b - np.asarray(t, dtype=float)) / (b - a), self.sharpness)

    def chi_infinity(self, t):
        c, d = self.infinity_plateau
        return smooth_step((np.asarray(t, dtype=float) - c) / (d - c), self.sharpness)


DEFAULT_CUTOFFS = CutoffConfig()


def chi_zero(t):
    """Default cutoff near zero: 1 for t <= 1/4, 0 for t >= 1/2."""
    return DEFAULT_CUTOFFS.chi_zero(t)


def chi_infinity(t):
    """Default cutoff near infinity: 0 for t <= 2, 1 for t >= 4."""
    return DEFAULT_CUTOFFS.chi_infinity(t)
