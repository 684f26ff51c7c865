"""Entanglement-trace kernel dispatch: compiled extension or numpy fallback.

The tau-star sweeps evaluate the entanglement of formation on grids of
about a million points per eta value, which makes this the only hot
loop in the package. Both backends implement the same fused form of the
trace. Starting from |gg> the state keeps the exchange symmetry, so its
four amplitudes reduce to three complex numbers

    u(tau) = a1*e^{i*omega*tau} + a4*e^{-i*omega*tau}
    v(tau) = b1*e^{i*omega*tau} + b4*e^{-i*omega*tau}
    w(tau) = e^{-2i*tau}/2

with omega = 2*sqrt(1+eta^2), amplitudes c_ee = u-w, c_gg = u+w,
c_eg = c_ge = v. The pure-state concurrence is then
C = 2*|u^2 - w^2 - v^2| and E follows from the binary entropy.

The compiled backend is selected at import when available; set
FIBERSPIN_PURE=1 to force the numpy path. Both are deterministic; they
may differ from each other by only a few ulp of trig rounding.
"""

from __future__ import annotations

import math
import os

import numpy as np

from . import _trace_py
from .errors import BadGrid, DegenerateEta

_impl = None
if os.environ.get("FIBERSPIN_PURE", "") in ("", "0"):
    try:
        from . import _trace_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = None


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return "compiled" if _impl is not None else "python"


def trace_constants(eta: float) -> tuple[float, float, float, float, float]:
    """Fused-kernel constants (a1, a4, b1, b4, omega) for a given eta.

    a_k = c_k * p_k and b_k = c_k * q_k collapse the initial-state
    coefficients into the eigenvector amplitudes; c_k = p_k makes them
    plain squares and products.
    """
    if not math.isfinite(eta) or eta <= 0.0:
        raise DegenerateEta(f"eta must be a positive real, got {eta!r}")
    s = math.sqrt(1.0 + eta * eta)
    one_minus_s = -eta * eta / (1.0 + s)
    r1 = s * (1.0 + s)
    r4 = -s * one_minus_s
    p1 = eta / (2.0 * math.sqrt(r1))
    q1 = -(1.0 + s) / (2.0 * math.sqrt(r1))
    p4 = eta / (2.0 * math.sqrt(r4))
    q4 = -one_minus_s / (2.0 * math.sqrt(r4))
    return p1 * p1, p4 * p4, p1 * q1, p4 * q4, 2.0 * s


def ent_trace_grid(eta: float, tau0: float, step: float, n: int) -> np.ndarray:
    """Entanglement of formation at tau0 + k*step for k in 0..n-1.

    Returns a float64 array of length n with every value in [0, 1].
    """
    if not (math.isfinite(tau0) and math.isfinite(step)) or step <= 0.0:
        raise BadGrid(f"need finite tau0 and step > 0, got tau0={tau0!r}, step={step!r}")
    if n < 1:
        raise BadGrid(f"need at least one grid point, got n={n!r}")
    a1, a4, b1, b4, omega = trace_constants(eta)
    if _impl is not None:
        return _impl.ent_trace(a1, a4, b1, b4, omega, tau0, step, int(n))
    return _trace_py.ent_trace(a1, a4, b1, b4, omega, tau0, step, int(n))
