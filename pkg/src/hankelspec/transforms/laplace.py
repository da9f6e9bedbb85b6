"""Laplace transform h(t) = int_0^inf exp(-t lambda) sigma(lambda) dlambda."""

from __future__ import annotations

import numpy as np

from ..funcspace.sigma import SigmaSpec
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, composite_rule, panel_edges, refine_until

# lower end of the log-lambda range; integrands behave like lambda^(q) near 0
LOG_LAMBDA_MIN = -80.0
# exp(-t lambda) is below e^-60 beyond lambda = 60 / t
DECAY_EXPONENT = 60.0
_CHUNK = 512


def _laplace_rule(sigma: SigmaSpec, t_min, t_max, cfg):
    # work in u = log lambda: uniform panels in u are geometric panels in lambda,
    # clustered toward lambda = 0, with lambda = 1 (u = 0) a panel edge
    u_hi = np.log(DECAY_EXPONENT / t_min)
    breaks = [0.0, *(-b for b in sigma.breakpoints)]
    edges = panel_edges(LOG_LAMBDA_MIN, u_hi, cfg.panel_width, breaks)
    u, w = composite_rule(edges, cfg.nodes_per_panel)
    lam = np.exp(u)
    vals = sigma.s(-u) * lam * w
    return lam, vals


def laplace_forward(sigma: SigmaSpec, t, q: QuadratureConfig | None = None):
    """Kernel values h(t) for the sigma function ``sigma``.

    The integral is taken in u = log(lambda) with composite Gauss-Legendre
    panels split at lambda = 1 and at the breakpoints of ``sigma``; accuracy is
    validated by halving the panel width.
    """
    cfg = q or DEFAULT_QUADRATURE
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise ValueError("t must be positive")
    flat = np.atleast_1d(t_arr).ravel()

    def evaluate(c):
        lam, vals = _laplace_rule(sigma, flat.min(), flat.max(), c)
        out = np.empty(flat.shape, dtype=np.result_type(vals, float))
        for i in range(0, flat.size, _CHUNK):
            tc = flat[i:i + _CHUNK]
            out[i:i + _CHUNK] = np.exp(-np.outer(tc, lam)) @ vals
        return out

    out = refine_until(evaluate, cfg).reshape(t_arr.shape)
    return out if out.ndim else out[()]


def laplace_kernel(sigma: SigmaSpec, q: QuadratureConfig | None = None):
    """Callable t -> h(t) wrapping :func:`laplace_forward`."""
    return lambda t: laplace_forward(sigma, t, q)
