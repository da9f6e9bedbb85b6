"""Power-law fits of computed spectra with logarithmic drift diagnostics."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .laws import AsymptoticLaw

DEFAULT_WINDOW = (0.15, 0.6)
MIN_POINTS = 10


@dataclass
class FitReport:
    """Result of fitting lambda_n ~ c n^-alpha on a window of indices.

    ``drift_slope`` is the slope of n^alpha_pred lambda_n against 1/log n and
    ``extrapolated_coef`` its intercept (the value as 1/log n -> 0).
    ``power_law_ok`` is False when the data are better described by
    log lambda_n linear in sqrt(n); ``suggested_family`` then reads 'widom'.
    """

    exponent: float
    coef: float
    window: tuple[int, int]
    n_points: int
    exponent_used: float
    drift_slope: float
    extrapolated_coef: float
    residual_power: float
    residual_sqrt: float
    power_law_ok: bool
    suggested_family: str
    branch: str = "+"
    predicted_coef: float | None = None
    relative_deviation: float | None = None

    def to_dict(self):
        d = asdict(self)
        d["window"] = list(self.window)
        return d

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def resolve_window(n_max, window=DEFAULT_WINDOW):
    """Index window [n_lo, n_hi]; fractions of ``n_max`` or explicit integers."""
    lo, hi = window
    if isinstance(lo, float) and lo <= 1 and isinstance(hi, float) and hi <= 1:
        lo, hi = int(np.ceil(lo * n_max)), int(np.floor(hi * n_max))
    lo, hi = max(int(lo), 1), min(int(hi), n_max)
    return lo, hi


def fit_power_law(values, window=DEFAULT_WINDOW, alpha_pred=None, law: AsymptoticLaw | None = None,
                  branch="+", curvature_tol=0.5) -> FitReport:
    """Fit lambda_n = c n^-alpha by least squares in log-log over a window.

    Parameters
    ----------
    values : array_like
        One branch, lambda_1 >= lambda_2 >= ... (index n starts at 1).
    window : pair
        Fractions of the number of values (default (0.15, 0.6)) or explicit
        1-based indices.
    alpha_pred : float, optional
        Exponent used for the drift diagnostic; defaults to the law's
        exponent, else to the fitted one.
    curvature_tol : float
        The power law is rejected when the sqrt(n) model's rms residual is
        below ``curvature_tol`` times the power model's.
    """
    lam = np.asarray(values, dtype=float)
    lo, hi = resolve_window(lam.size, window)
    if hi - lo + 1 < MIN_POINTS:
        raise ValueError(f"window [{lo}, {hi}] holds fewer than {MIN_POINTS} values")
    n = np.arange(lo, hi + 1, dtype=float)
    y = lam[lo - 1:hi]
    if np.any(y <= 0):
        raise ValueError("branch contains non-positive values in the fit window")
    logy = np.log(y)
    A = np.column_stack([np.ones_like(n), np.log(n)])
    (a0, a1), *_ = np.linalg.lstsq(A, logy, rcond=None)
    exponent, coef = -a1, float(np.exp(a0))
    r_pow = float(np.sqrt(np.mean((A @ [a0, a1] - logy) ** 2)))
    B = np.column_stack([np.ones_like(n), np.sqrt(n)])
    bcoef, *_ = np.linalg.lstsq(B, logy, rcond=None)
    r_sqrt = float(np.sqrt(np.mean((B @ bcoef - logy) ** 2)))
    ok = not r_sqrt < curvature_tol * r_pow
    if alpha_pred is None:
        alpha_pred = law.exponent if law is not None and law.family != "widom" else exponent
    scaled = n ** alpha_pred * y
    C = np.column_stack([np.ones_like(n), 1 / np.log(n)])
    (c0, c1), *_ = np.linalg.lstsq(C, scaled, rcond=None)
    pred = rel = None
    if law is not None and law.family != "widom":
        pred = law.coef(branch)
        rel = float(abs(c0 - pred) / pred) if pred > 0 else float(abs(c0))
    return FitReport(float(exponent), coef, (lo, hi), int(n.size), float(alpha_pred), float(c1), float(c0),
                     r_pow, r_sqrt, ok, "power" if ok else "widom", branch, pred, rel)


class PowerLawFitter(BaseEstimator):
    """Estimator wrapper around :func:`fit_power_law`; ``predict`` returns c n^-alpha."""

    def __init__(self, window=DEFAULT_WINDOW, alpha_pred=None, curvature_tol=0.5):
        self.window = window
        self.alpha_pred = alpha_pred
        self.curvature_tol = curvature_tol

    def fit(self, X, y=None):
        """``X`` is the branch of values; alternatively pass indices as X and values as y."""
        values = np.asarray(X if y is None else y, dtype=float).ravel()
        if y is not None:
            idx = np.asarray(X).ravel()
            if not np.array_equal(idx, np.arange(1, idx.size + 1)):
                raise ValueError("indices must be 1, 2, ..., n")
        self.report_ = fit_power_law(values, self.window, self.alpha_pred, curvature_tol=self.curvature_tol)
        self.exponent_ = self.report_.exponent
        self.coef_ = self.report_.coef
        return self

    def predict(self, n):
        check_is_fitted(self, "report_")
        return self.coef_ * np.asarray(n, dtype=float) ** (-self.exponent_)
