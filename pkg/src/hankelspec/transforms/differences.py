"""Forward differences g^(m)(j) = g^(m-1)(j + 1) - g^(m-1)(j)."""

from __future__ import annotations

import numpy as np

from .._validation import check_nonneg_int


def iterated_difference(g, m, j):
    """m-fold forward difference of the sequence ``g`` at index ``j``."""
    m = check_nonneg_int(m, "m")
    j = check_nonneg_int(j, "j")
    g = np.asarray(g)
    if j + m >= g.shape[0]:
        raise IndexError(f"need values up to index {j + m}, have {g.shape[0]}")
    return np.diff(g[j:j + m + 1], n=m)[0]


def iterated_differences(g, m):
    """All available m-fold forward differences, length len(g) - m."""
    m = check_nonneg_int(m, "m")
    g = np.asarray(g)
    if m >= g.shape[0]:
        raise IndexError(f"order {m} needs more than {g.shape[0]} values")
    return np.diff(g, n=m)
