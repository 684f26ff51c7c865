"""Numpy fallback for the entanglement-trace kernel. Same math as _trace_cy."""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 17


def ent_trace(
    a1: float,
    a4: float,
    b1: float,
    b4: float,
    omega: float,
    tau0: float,
    step: float,
    n: int,
) -> np.ndarray:
    out = np.empty(n, dtype=np.float64)
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        t = tau0 + np.arange(lo, hi, dtype=np.float64) * step
        cw = np.cos(omega * t)
        sw = np.sin(omega * t)
        c2 = np.cos(2.0 * t)
        s2 = np.sin(2.0 * t)
        ur = (a1 + a4) * cw
        ui = (a1 - a4) * sw
        vr = (b1 + b4) * cw
        vi = (b1 - b4) * sw
        rk = (ur * ur - ui * ui) - (vr * vr - vi * vi) - 0.25 * (c2 * c2 - s2 * s2)
        ik = 2.0 * (ur * ui - vr * vi) + 0.5 * (c2 * s2)
        conc = 2.0 * np.sqrt(rk * rk + ik * ik)
        np.minimum(conc, 1.0, out=conc)
        x = 0.5 * (1.0 + np.sqrt(1.0 - conc * conc))
        y = 1.0 - x
        e = np.zeros(hi - lo)
        inside = y > 0.0
        xi = x[inside]
        yi = y[inside]
        e[inside] = -xi * np.log2(xi) - yi * np.log2(yi)
        out[lo:hi] = e
    return out
