"""Moments g(j) = int_{-1}^{1} eta(mu) mu^j dmu."""

from __future__ import annotations

import numpy as np

from ..funcspace.sigma import LOG2, SigmaSpec
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, composite_rule, panel_edges, refine_until

# exp(-|w|) below e^-45 relative to the endpoint scale is negligible
TAIL = 45.0
_CHUNK = 1024


def _moment_rule(sigma: SigmaSpec, j_max, cfg):
    # mu = tanh(w/2): geometric clustering toward both endpoints, and
    # log|mu| = log1p(-e^-|w|) - log1p(e^-|w|) stays accurate near |mu| = 1
    W = np.log(2.0 * j_max + 2.0) + TAIL
    breaks = [0.0, *(LOG2 - b for b in sigma.breakpoints)]
    edges = panel_edges(-W, W, cfg.panel_width, breaks)
    w, wt = composite_rule(edges, cfg.nodes_per_panel)
    e = np.exp(-np.abs(w))
    jac = 2 * e / (1 + e) ** 2
    log_abs_mu = np.log1p(-e) - np.log1p(e)
    weights = sigma.s(LOG2 - w) * jac * wt
    return np.sign(w), log_abs_mu, weights


def moments_from_eta(sigma: SigmaSpec, j_max, q: QuadratureConfig | None = None):
    """All moments g(0..j_max) of the eta-view of ``sigma`` from one node set.

    Nodes live in w = 2 artanh(mu), where the endpoints mu = +-1 move to
    infinity and mu^j = sign^j exp(j log|mu|) is evaluated without cancellation.
    A panel width of 0.5 in w keeps several nodes per oscillation of mu^j.
    """
    if j_max < 0:
        raise ValueError("j_max must be >= 0")
    cfg = q or DEFAULT_QUADRATURE
    j = np.arange(j_max + 1)
    parity = np.where(j % 2 == 0, 1.0, -1.0)

    def evaluate(c):
        sgn, logmu, wts = _moment_rule(sigma, j_max, c)
        pos, neg = sgn >= 0, sgn < 0
        out = np.empty(j.size, dtype=np.result_type(wts, float))
        for i in range(0, j.size, _CHUNK):
            jc = j[i:i + _CHUNK, None]
            p = np.exp(jc * logmu[None, pos]) @ wts[pos]
            m = np.exp(jc * logmu[None, neg]) @ wts[neg]
            out[i:i + _CHUNK] = p + parity[i:i + _CHUNK] * m
        return out

    return refine_until(evaluate, cfg)
