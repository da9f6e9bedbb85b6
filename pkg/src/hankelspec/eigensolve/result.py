"""Signed, sorted spectra with convergence metadata."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class ConvergenceError(RuntimeError):
    """An iterative solver did not reach its tolerance within the budget."""


def _empty():
    return np.zeros(0)


@dataclass
class SpectrumResult:
    """Eigenvalue branches and singular values of a self-adjoint (or general) operator.

    ``plus`` holds the positive eigenvalues in non-increasing order and
    ``minus`` the moduli of the negative ones (the positive eigenvalues of
    -A), also non-increasing.  ``singular`` holds singular values.  Each array
    has a matching array of residual norms.
    """

    plus: np.ndarray = field(default_factory=_empty)
    minus: np.ndarray = field(default_factory=_empty)
    singular: np.ndarray = field(default_factory=_empty)
    residual_plus: np.ndarray = field(default_factory=_empty)
    residual_minus: np.ndarray = field(default_factory=_empty)
    residual_singular: np.ndarray = field(default_factory=_empty)
    norm: float = float("nan")
    iterations: int = 0
    method: str = ""
    dimension: int = 0

    def __post_init__(self):
        for name in ("plus", "minus", "singular"):
            vals = np.asarray(getattr(self, name), dtype=float)
            if np.any(np.diff(vals) > 0):
                raise ValueError(f"{name} must be non-increasing")
            if np.any(vals < 0):
                raise ValueError(f"{name} must be non-negative")
            setattr(self, name, vals)
            res = np.asarray(getattr(self, "residual_" + name), dtype=float)
            if res.size == 0:
                res = np.zeros_like(vals)
            setattr(self, "residual_" + name, res)

    def branch(self, sign):
        return {"+": self.plus, "plus": self.plus, "-": self.minus, "minus": self.minus,
                "s": self.singular, "singular": self.singular}[sign]

    def negated(self):
        """Spectrum of -A: branches swap."""
        return SpectrumResult(self.minus, self.plus, self.singular, self.residual_minus, self.residual_plus,
                              self.residual_singular, self.norm, self.iterations, self.method, self.dimension)

    def to_csv(self, path):
        """Columns n, lambda_plus, lambda_minus, s_n, residual (max over the row)."""
        rows = max(self.plus.size, self.minus.size, self.singular.size)
        with Path(path).open("w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(["n", "lambda_plus", "lambda_minus", "s_n", "residual"])
            for i in range(rows):
                cells, res = [i + 1], []
                for vals, rr in ((self.plus, self.residual_plus), (self.minus, self.residual_minus),
                                 (self.singular, self.residual_singular)):
                    if i < vals.size:
                        cells.append(repr(float(vals[i])))
                        res.append(float(rr[i]))
                    else:
                        cells.append("")
                cells.append(repr(max(res)) if res else "")
                wr.writerow(cells)

    @classmethod
    def from_csv(cls, path):
        with Path(path).open(newline="") as fh:
            body = list(csv.reader(fh))[1:]
        cols = [[float(r[c]) for r in body if r[c] != ""] for c in (1, 2, 3)]
        return cls(np.array(cols[0]), np.array(cols[1]), np.array(cols[2]))


def split_branches(eigenvalues, residuals=None, zero_tol=0.0):
    """Sort real eigenvalues into the + and - branches, dropping |lambda| <= zero_tol."""
    lam = np.asarray(eigenvalues, dtype=float)
    res = np.zeros_like(lam) if residuals is None else np.asarray(residuals, dtype=float)
    pos = lam > zero_tol
    neg = lam < -zero_tol
    ip = np.argsort(-lam[pos], kind="stable")
    im = np.argsort(lam[neg], kind="stable")
    return lam[pos][ip], res[pos][ip], -lam[neg][im], res[neg][im]
