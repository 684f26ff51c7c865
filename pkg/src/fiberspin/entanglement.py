"""Two-qubit entanglement measures and the entanglement-versus-time trace.

Concurrence and entanglement of formation follow Wootters' construction.
For a pure state in the shared basis (|ee>, |eg>, |ge>, |gg>) the
concurrence collapses to 2*|c_ee*c_gg - c_eg*c_ge|; for a mixed state it
is max(0, l1-l2-l3-l4) with l_i the descending square roots of the
eigenvalues of rho*(sy x sy)*conj(rho)*(sy x sy). Both feed

    E = h((1 + sqrt(1-C^2))/2),  h(x) = -x*log2(x) - (1-x)*log2(1-x),

with the 0*log(0) = 0 convention.

The trace functions sample E along the closed-form evolution from |gg>
on a uniform grid in scaled time; tau_star finds the earliest grid time
whose E is within tolerance of the grid maximum. The trace is
quasiperiodic (frequencies 2 and 2*sqrt(1+eta^2)), so the maximum is
approached on beats rather than attained exactly, and the tolerance is
what makes "first time near the maximum" well defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    BadGrid,
    InvalidDensityMatrix,
    NotNormalized,
    OutOfRange,
)
from .numerics import eig_hermitian4

#: (sy x sy) in basis order; real and symmetric
SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)

_NORM_TOL = 1e-10
_DM_TOL = 1e-10


def concurrence_pure(psi) -> float:
    """Concurrence of a normalized two-qubit pure state."""
    a = np.asarray(psi, dtype=np.complex128)
    if a.shape != (4,):
        raise ValueError(f"expected 4 amplitudes, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite amplitudes")
    nrm = float(np.linalg.norm(a))
    if abs(nrm - 1.0) > _NORM_TOL:
        raise NotNormalized(f"|psi| = {nrm!r} differs from 1 beyond {_NORM_TOL:.0e}")
    c = 2.0 * abs(a[0] * a[3] - a[1] * a[2])
    return min(c, 1.0)


def _check_density_matrix(rho) -> np.ndarray:
    a = np.asarray(rho, dtype=np.complex128)
    if a.shape != (4, 4):
        raise InvalidDensityMatrix(f"expected shape (4, 4), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidDensityMatrix("non-finite entries")
    if float(np.max(np.abs(a - a.conj().T))) > _DM_TOL:
        raise InvalidDensityMatrix(f"not Hermitian to {_DM_TOL:.0e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > _DM_TOL:
        raise InvalidDensityMatrix(f"trace = {tr!r} differs from 1 beyond {_DM_TOL:.0e}")
    return a


def concurrence_mixed(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Implemented through the Hermitian product sqrt(rho) * rho_tilde *
    sqrt(rho), whose eigenvalues are the squares of the usual lambda_i;
    this keeps every eigensolve on a Hermitian matrix. Agrees with
    concurrence_pure on rank-1 inputs to ~1e-14.
    """
    a = _check_density_matrix(rho)
    eig = eig_hermitian4(a)
    vals = eig.values
    if float(vals[0]) < -_DM_TOL:
        raise InvalidDensityMatrix(f"negative eigenvalue {float(vals[0])!r}")
    root = eig.vectors @ np.diag(np.sqrt(np.clip(vals, 0.0, None))) @ eig.vectors.conj().T
    tilde = SPIN_FLIP @ a.conj() @ SPIN_FLIP
    m = root @ tilde @ root
    m = 0.5 * (m + m.conj().T)
    mu = np.clip(eig_hermitian4(m).values, 0.0, None)
    # eigenvalues of m below the rounding floor are noise around zero;
    # square-rooting them would inject sqrt(eps) ~ 1e-8 into the sum
    floor = 64.0 * np.finfo(np.float64).eps * float(mu[-1])
    mu[mu <= floor] = 0.0
    lams = np.sqrt(mu)[::-1]
    c = float(lams[0] - lams[1] - lams[2] - lams[3])
    return min(max(c, 0.0), 1.0)


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation as a function of concurrence, on [0, 1]."""
    if not isinstance(c, (int, float)) or not math.isfinite(c):
        raise OutOfRange(f"concurrence must be a finite real, got {c!r}")
    if c < 0.0 or c > 1.0:
        raise OutOfRange(f"concurrence must lie in [0, 1], got {c!r}")
    x = 0.5 * (1.0 + math.sqrt(1.0 - c * c))
    y = 1.0 - x
    if y <= 0.0:
        return 0.0
    return -x * math.log2(x) - y * math.log2(y)


@dataclass(frozen=True)
class EntanglementTrace:
    """Uniformly sampled E(tau) curve for one eta."""

    eta: float
    step: float
    taus: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.taus.shape != self.values.shape or self.taus.ndim != 1 or self.taus.size < 1:
            raise BadGrid("taus and values must be equal-length 1-d arrays")
        if self.taus.size > 1:
            d = np.diff(self.taus)
            if not (np.all(d > 0.0) and float(np.max(np.abs(d - self.step))) <= 1e-9 * self.step):
                raise BadGrid("taus must increase uniformly by step")
        if not np.all((self.values >= 0.0) & (self.values <= 1.0 + 1e-9)):
            raise ValueError("entanglement values escaped [0, 1]")

    @property
    def points(self):
        """Ordered (tau, e) pairs."""
        return list(zip(self.taus.tolist(), self.values.tolist()))


@dataclass(frozen=True)
class TauStarResult:
    """Earliest grid time within tolerance of the grid maximum, plus its inputs."""

    eta: float
    tau_star: float
    e_max: float
    window: float
    tolerance: float


def entanglement_trace(eta: float, tau_max: float, step: float) -> EntanglementTrace:
    """Sample E(tau) from tau = 0 to tau_max (inclusive) in uniform steps.

    step must satisfy 0 < step <= 0.1 (coarser grids alias the beat
    structure) and tau_max >= step. E(0) = 0 since |gg> is a product
    state.
    """
    if not (math.isfinite(step) and 0.0 < step <= 0.1):
        raise BadGrid(f"step must satisfy 0 < step <= 0.1, got {step!r}")
    if not math.isfinite(tau_max) or tau_max < step:
        raise BadGrid(f"tau_max must be >= step, got {tau_max!r}")
    n = int(math.floor(tau_max / step + 1e-9)) + 1
    values = kernels.ent_trace_grid(eta, 0.0, step, n)
    taus = np.arange(n, dtype=np.float64) * step
    return EntanglementTrace(eta=eta, step=step, taus=taus, values=values)


def tau_star(
    eta: float,
    window: float = 1e4,
    step: float = 1e-2,
    tolerance: float = 1e-2,
) -> TauStarResult:
    """First scaled time whose E is within tolerance of the window maximum."""
    if not isinstance(tolerance, (int, float)) or not math.isfinite(tolerance) or tolerance < 0.0:
        raise OutOfRange(f"tolerance must be >= 0, got {tolerance!r}")
    tr = entanglement_trace(eta, window, step)
    e_max = float(np.max(tr.values))
    idx = int(np.argmax(tr.values >= e_max - tolerance))
    return TauStarResult(
        eta=eta,
        tau_star=float(tr.taus[idx]),
        e_max=e_max,
        window=window,
        tolerance=tolerance,
    )
