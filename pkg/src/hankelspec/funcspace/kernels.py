"""Kernels h(t) of integral Hankel operators, as sums of named terms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .._validation import check_nonneg_int, check_positive
from .cutoffs import chi_infinity, chi_zero

# relative distance from t0 at which a jump kernel takes its midpoint value
JUMP_ATOL = 1e-12


@dataclass(frozen=True)
class LogPower:
    """kappa * t^-1 |log t|^-alpha, cut off to one end of the half-line.

    ``endpoint='zero'`` multiplies by chi_0(t), ``endpoint='infinity'`` by chi_inf(t).
    """

    kappa: float
    alpha: float
    endpoint: str = "infinity"

    def __post_init__(self):
        check_positive(self.alpha, "alpha")
        if self.endpoint not in ("zero", "infinity"):
            raise ValueError(f"endpoint must be 'zero' or 'infinity', got {self.endpoint!r}")

    def __call__(self, t):
        cut = chi_zero(t) if self.endpoint == "zero" else chi_infinity(t)
        out = np.zeros_like(t)
        live = cut > 0
        tl = t[live]
        out[live] = self.kappa * cut[live] / (tl * np.abs(np.log(tl)) ** self.alpha)
        return out


@dataclass(frozen=True)
class Oscillatory:
    """kappa * t^-1 (log t)^-alpha * exp(-i rho t), cut off by chi_inf(t)."""

    kappa: complex
    alpha: float
    rho: float

    def __post_init__(self):
        check_positive(self.alpha, "alpha")

    def __call__(self, t):
        cut = chi_infinity(t)
        out = np.zeros(t.shape, dtype=complex)
        live = cut > 0
        tl = t[live]
        out[live] = self.kappa * cut[live] * np.exp(-1j * self.rho * tl) / (tl * np.log(tl) ** self.alpha)
        return out


@dataclass(frozen=True)
class Jump:
    """h0 (t0 - t)^l on (0, t0), zero beyond t0.

    For ``l = 0`` the value at t0 itself is the midpoint h0/2 of the jump.
    """

    h0: float
    l: int
    t0: float

    def __post_init__(self):
        check_nonneg_int(self.l, "l")
        check_positive(self.t0, "t0")

    def __call__(self, t):
        d = self.t0 - t
        at_jump = np.abs(d) <= JUMP_ATOL * self.t0
        inside = (d > 0) & ~at_jump
        out = np.zeros_like(t)
        out[inside] = self.h0 * d[inside] ** self.l
        if self.l == 0:
            out[at_jump] = 0.5 * self.h0
        return out


@dataclass(frozen=True)
class CarlemanPoly:
    """P(log t) / t with P given by ascending coefficients ``p``."""

    p: tuple[float, ...]

    def __post_init__(self):
        p = tuple(float(c) for c in self.p)
        if not p:
            raise ValueError("p must contain at least one coefficient")
        if len(p) > 1 and p[-1] != 1.0:
            raise ValueError("leading coefficient of P must be 1 when deg P >= 1")
        object.__setattr__(self, "p", p)

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(np.log(t), self.p) / t


@dataclass(frozen=True)
class TabulatedKernel:
    """Kernel given by a callable, or by a table interpolated linearly in log t."""

    func: Callable | None = None
    points: tuple[float, ...] | None = None
    values: tuple[float, ...] | None = None

    def __post_init__(self):
        if (self.func is None) == (self.points is None):
            raise ValueError("give exactly one of func or (points, values)")
        if self.points is not None:
            pts = np.asarray(self.points, dtype=float)
            if self.values is None or len(self.values) != len(pts):
                raise ValueError("points and values must have equal length")
            if np.any(pts <= 0) or np.any(np.diff(pts) <= 0):
                raise ValueError("table points must be positive and increasing")

    def __call__(self, t):
        if self.func is not None:
            return np.asarray(self.func(t))
        logp = np.log(np.asarray(self.points, dtype=float))
        vals = np.asarray(self.values)
        if np.iscomplexobj(vals):
            return np.interp(np.log(t), logp, vals.real, 0, 0) + 1j * np.interp(np.log(t), logp, vals.imag, 0, 0)
        return np.interp(np.log(t), logp, vals, 0.0, 0.0)


KERNEL_TERMS = {
    "LogPower": LogPower,
    "Oscillatory": Oscillatory,
    "Jump": Jump,
    "CarlemanPoly": CarlemanPoly,
    "Tabulated": TabulatedKernel,
}


@dataclass(frozen=True)
class KernelSpec:
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __call__(self, t):
        return eval_kernel(self, t)

    @property
    def support_end(self):
        """Right end of the support when every term is a jump, else ``inf``."""
        if self.terms and all(isinstance(term, Jump) for term in self.terms):
            return max(term.t0 for term in self.terms)
        return np.inf


def eval_kernel(spec: KernelSpec, t):
    """Evaluate h(t) = sum of the terms of ``spec``; vectorized over ``t > 0``."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise ValueError("kernel argument must be positive")
    flat = np.atleast_1d(t_arr).ravel()
    total = np.zeros(flat.shape)
    for term in spec.terms:
        total = total + term(flat)
    total = total.reshape(t_arr.shape)
    return total if total.ndim else total[()]


def kernel_from_config(cfg: Sequence[dict] | dict) -> KernelSpec:
    """Build a ``KernelSpec`` from ``{"terms": [{"type": ..., **fields}, ...]}``."""
    items = cfg["terms"] if isinstance(cfg, dict) else cfg
    terms = []
    for item in items:
        item = dict(item)
        kind = item.pop("type", None)
        if kind not in KERNEL_TERMS:
            raise ValueError(f"unknown kernel term type {kind!r}")
        if "kappa" in item and isinstance(item["kappa"], (list, tuple)):
            item["kappa"] = complex(*item["kappa"])
        if kind == "CarlemanPoly":
            item["p"] = tuple(item["p"])
        terms.append(KERNEL_TERMS[kind](**item))
    return KernelSpec(tuple(terms))
