"""Small dense linear algebra used by the physics modules.

Everything here is sized for the problem at hand: 2x2 complex solves for
the intracavity field equations and a 4x4 Hermitian eigensolver for the
two-qubit Hamiltonian and density matrices. The eigensolver is a cyclic
complex Jacobi iteration rather than a LAPACK call so that results are
bit-reproducible across BLAS builds and thread counts; at size 4 it is
also fast enough that the library never needs anything heavier.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotNormalized, SingularSystem

#: relative determinant floor for the 2x2 solver
SOLVE2_EPS = 1e-12

#: Hermiticity tolerance, relative to the largest matrix entry
HERMITIAN_TOL = 1e-10

#: state-vector norm tolerance
NORM_TOL = 1e-10

_JACOBI_MAX_SWEEPS = 30
_JACOBI_OFF_TOL = 1e-14

# fixed upper-triangle visit order for the cyclic sweeps
_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def solve2(m, rhs) -> np.ndarray:
    """Solve a 2x2 complex linear system by Cramer's rule.

    Parameters
    ----------
    m : array_like, shape (2, 2), complex
    rhs : array_like, shape (2,), complex

    Returns
    -------
    ndarray, shape (2,), complex128

    Raises
    ------
    SingularSystem
        If |det m| <= 1e-12 * max|m_ij|^2, i.e. the system is singular
        relative to the scale of its entries.
    """
    a = np.asarray(m, dtype=np.complex128)
    b = np.asarray(rhs, dtype=np.complex128)
    if a.shape != (2, 2) or b.shape != (2,):
        raise ValueError(f"expected shapes (2,2) and (2,), got {a.shape} and {b.shape}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("non-finite entries in linear system")
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    scale = float(np.max(np.abs(a)))
    if abs(det) <= SOLVE2_EPS * scale * scale:
        raise SingularSystem(f"|det| = {abs(det):.3e} <= {SOLVE2_EPS:.0e} * {scale * scale:.3e}")
    x0 = (b[0] * a[1, 1] - a[0, 1] * b[1]) / det
    x1 = (a[0, 0] * b[1] - b[0] * a[1, 0]) / det
    return np.array([x0, x1], dtype=np.complex128)


@dataclass(frozen=True)
class HermEig4:
    """Eigendecomposition of a 4x4 Hermitian matrix.

    values are ascending and real; vectors[:, k] is the unit eigenvector
    for values[k].
    """

    values: np.ndarray
    vectors: np.ndarray


def _check_hermitian(h) -> np.ndarray:
    a = np.asarray(h, dtype=np.complex128)
    if a.shape != (4, 4):
        raise ValueError(f"expected shape (4, 4), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite matrix entries")
    scale = float(np.max(np.abs(a)))
    if float(np.max(np.abs(a - a.conj().T))) > HERMITIAN_TOL * max(scale, 1.0):
        raise NotHermitian(f"max |h - h^dagger| exceeds {HERMITIAN_TOL:.0e} * scale")
    return a


def eig_hermitian4(h) -> HermEig4:
    """Diagonalize a 4x4 Hermitian matrix with cyclic complex Jacobi sweeps.

    Off-diagonal elements are annihilated pairwise with unitary plane
    rotations in a fixed visit order, which makes the result a pure
    function of the input bits. Converges in a handful of sweeps for
    any Hermitian input of this size.

    Raises NotHermitian if the input fails the Hermiticity check.
    """
    a = _check_hermitian(h)
    # work on the exact Hermitian average so roundoff in the caller
    # cannot leak into the iteration
    a = 0.5 * (a + a.conj().T)
    v = np.eye(4, dtype=np.complex128)
    frob = math.sqrt(float(np.sum(np.abs(a) ** 2)))
    if frob == 0.0:
        return HermEig4(values=np.zeros(4), vectors=v)
    tol = _JACOBI_OFF_TOL * frob

    for _ in range(_JACOBI_MAX_SWEEPS):
        off = math.sqrt(
            2.0 * sum(abs(a[p, q]) ** 2 for p, q in _PAIRS)
        )
        if off <= tol:
            break
        for p, q in _PAIRS:
            bpq = a[p, q]
            ab = abs(bpq)
            if ab == 0.0:
                continue
            phase = bpq / ab
            app = a[p, p].real
            aqq = a[q, q].real
            if app == aqq:
                t = 1.0
            else:
                zeta = (app - aqq) / (2.0 * ab)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.hypot(zeta, 1.0))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            # columns: (Av)[:, p] = c*col_p + s*conj(phase)*col_q
            colp = a[:, p].copy()
            colq = a[:, q].copy()
            a[:, p] = c * colp + s * phase.conjugate() * colq
            a[:, q] = -s * phase * colp + c * colq
            # rows: (v^dagger A)[p, :] = c*row_p + s*phase*row_q
            rowp = a[p, :].copy()
            rowq = a[q, :].copy()
            a[p, :] = c * rowp + s * phase * rowq
            a[q, :] = -s * phase.conjugate() * rowp + c * rowq
            a[p, q] = 0.0
            a[q, p] = 0.0
            a[p, p] = a[p, p].real
            a[q, q] = a[q, q].real
            # accumulate the same column rotation into the eigenvector basis
            vp = v[:, p].copy()
            vq = v[:, q].copy()
            v[:, p] = c * vp + s * phase.conjugate() * vq
            v[:, q] = -s * phase * vp + c * vq
    else:
        raise FloatingPointError("jacobi iteration did not converge in 30 sweeps")

    values = np.real(np.diag(a)).copy()
    order = np.argsort(values, kind="stable")
    return HermEig4(values=values[order], vectors=v[:, order])


def propagate(h, t: float, psi0) -> np.ndarray:
    """Evolve psi0 under exp(-i h t) via the eigendecomposition of h.

    h must be Hermitian (4x4) and psi0 a unit vector; t is a real time
    in the inverse units of h.
    """
    if not math.isfinite(t):
        raise ValueError("time must be finite")
    psi = np.asarray(psi0, dtype=np.complex128)
    if psi.shape != (4,):
        raise ValueError(f"expected state shape (4,), got {psi.shape}")
    nrm = float(np.linalg.norm(psi))
    if abs(nrm - 1.0) > NORM_TOL:
        raise NotNormalized(f"|psi| = {nrm!r} differs from 1 beyond {NORM_TOL:.0e}")
    eig = eig_hermitian4(h)
    phases = np.array([cmath.exp(-1j * w * t) for w in eig.values])
    return eig.vectors @ (phases * (eig.vectors.conj().T @ psi))
