"""Estimator-style front ends for the spectral solvers."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ..operators.hankel import HankelMatrix
from .dense import dense_sym_eig
from .lanczos import lanczos_extreme
from .svd import singular_values


def as_operator(X):
    """Accept an operator object, a square matrix, or a generating sequence of odd length."""
    if hasattr(X, "matvec") and hasattr(X, "shape"):
        return X
    X = np.asarray(X)
    if X.ndim == 2:
        return X
    if X.ndim == 1 and X.size % 2 == 1:
        return HankelMatrix(X, (X.size + 1) // 2)
    raise ValueError("expected an operator, a square matrix or 2N - 1 generating values")


def _dtype(op):
    return getattr(op, "dtype", np.asarray(op).dtype if isinstance(op, np.ndarray) else float)


class HankelSpectrum(BaseEstimator):
    """Eigenvalue branches of a self-adjoint Hankel-type operator.

    ``solver='auto'`` uses the dense path up to ``dense_limit`` and Lanczos
    with the operator's fast matvec beyond it.
    """

    def __init__(self, n_components=10, solver="auto", tol=1e-8, max_iter=None, random_state=0,
                 dense_limit=4096):
        self.n_components = n_components
        self.solver = solver
        self.tol = tol
        self.max_iter = max_iter
        self.random_state = random_state
        self.dense_limit = dense_limit

    def fit(self, X, y=None):
        op = as_operator(X)
        n = op.shape[0]
        solver = self.solver
        if solver == "auto":
            solver = "dense" if n <= self.dense_limit else "lanczos"
        if solver == "dense":
            res = dense_sym_eig(op)
        elif solver == "lanczos":
            mv = op.matvec if hasattr(op, "matvec") else (lambda u: op @ u)
            res = lanczos_extreme(mv, n, self.n_components, max_iter=self.max_iter, tol=self.tol,
                                  seed=self.random_state, dtype=_dtype(op))
        else:
            raise ValueError(f"unknown solver {self.solver!r}")
        self.result_ = res
        self.eigenvalues_plus_ = res.plus[:self.n_components]
        self.eigenvalues_minus_ = res.minus[:self.n_components]
        self.n_features_in_ = n
        return self

    def transform(self, X=None):
        """Return the stacked branches (n_components, 2), padded with NaN."""
        check_is_fitted(self, "result_")
        out = np.full((self.n_components, 2), np.nan)
        out[:self.eigenvalues_plus_.size, 0] = self.eigenvalues_plus_
        out[:self.eigenvalues_minus_.size, 1] = self.eigenvalues_minus_
        return out


class SingularValueSpectrum(BaseEstimator):
    """Largest singular values of a (possibly complex symmetric) Hankel-type operator."""

    def __init__(self, n_components=10, tol=1e-8, max_iter=None, random_state=0):
        self.n_components = n_components
        self.tol = tol
        self.max_iter = max_iter
        self.random_state = random_state

    def fit(self, X, y=None):
        op = as_operator(X)
        n = op.shape[0]
        if isinstance(op, np.ndarray):
            mv, rmv = (lambda u: op @ u), (lambda u: op.conj().T @ u)
        else:
            mv = op.matvec
            rmv = getattr(op, "rmatvec", op.matvec)
        res = singular_values(mv, rmv, n, self.n_components, max_iter=self.max_iter, tol=self.tol,
                              seed=self.random_state, dtype=np.result_type(_dtype(op), complex))
        self.result_ = res
        self.singular_values_ = res.singular[:self.n_components]
        self.n_features_in_ = n
        return self

    def transform(self, X=None):
        check_is_fitted(self, "result_")
        return self.singular_values_.copy()
