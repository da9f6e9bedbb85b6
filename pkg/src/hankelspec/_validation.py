"""Small input-validation helpers shared across the package."""

from __future__ import annotations

import numbers

import numpy as np


def check_positive(value, name, strict=True):
    """Return ``value`` as float, raising ``ValueError`` unless it is positive."""
    if not isinstance(value, numbers.Real) or isinstance(value, bool):
        raise TypeError(f"{name} must be a real number, got {type(value).__name__}")
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    if strict and value <= 0:
        raise ValueError(f"{name} must be > 0, got {value}")
    if not strict and value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return value


def check_nonneg_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return int(value)


def check_power_of_two(value, name):
    value = check_nonneg_int(value, name)
    if value < 2 or value & (value - 1):
        raise ValueError(f"{name} must be a power of two >= 2, got {value}")
    return value


def check_vector(u, n, name="u"):
    """Coerce ``u`` to a 1-D array of length ``n``."""
    u = np.asarray(u)
    if u.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {u.shape}")
    if u.shape[0] != n:
        raise ValueError(f"{name} has length {u.shape[0]}, expected {n}")
    if not np.issubdtype(u.dtype, np.number):
        raise TypeError(f"{name} must be numeric")
    return u


def check_square(A, name="A"):
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {A.shape}")
    return A


def check_self_adjoint(A, rtol=1e-12, name="A"):
    """Raise unless ``A`` is symmetric (real) or Hermitian (complex) to ``rtol``."""
    A = check_square(A, name)
    scale = np.max(np.abs(A)) if A.size else 0.0
    if scale == 0.0:
        return A
    asym = np.max(np.abs(A - A.conj().T))
    if asym > rtol * scale:
        raise ValueError(f"{name} is not self-adjoint: max |A - A*| = {asym:.3e}")
    return A


def as_real_if_close(x, tol=0.0):
    """Drop a vanishing imaginary part, exactly by default."""
    x = np.asarray(x)
    if np.iscomplexobj(x) and np.all(np.abs(x.imag) <= tol * max(np.max(np.abs(x), initial=0.0), 1.0)):
        return x.real.copy()
    return x
