# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled entanglement-trace kernel. Same math as _trace_py, element at a time.

from libc.math cimport cos, sin, sqrt, log2

import numpy as np


def ent_trace(double a1, double a4, double b1, double b4, double omega,
              double tau0, double step, Py_ssize_t n):
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t k
    cdef double t, cw, sw, c2, s2, ur, ui, vr, vi, rk, ik, conc, x, y
    cdef double sa = a1 + a4, da = a1 - a4, sb = b1 + b4, db = b1 - b4
    with nogil:
        for k in range(n):
            t = tau0 + k * step
            cw = cos(omega * t)
            sw = sin(omega * t)
            c2 = cos(2.0 * t)
            s2 = sin(2.0 * t)
            ur = sa * cw
            ui = da * sw
            vr = sb * cw
            vi = db * sw
            rk = (ur * ur - ui * ui) - (vr * vr - vi * vi) - 0.25 * (c2 * c2 - s2 * s2)
            ik = 2.0 * (ur * ui - vr * vi) + 0.5 * (c2 * s2)
            conc = 2.0 * sqrt(rk * rk + ik * ik)
            if conc > 1.0:
                conc = 1.0
            x = 0.5 * (1.0 + sqrt(1.0 - conc * conc))
            y = 1.0 - x
            if y > 0.0:
                o[k] = -x * log2(x) - y * log2(y)
            else:
                o[k] = 0.0
    return out
