"""Dense complex matrix primitives: adjoint, eigen/SVD wrappers, fractional powers.

Everything operates on square numpy arrays of complex128.  Matrices are
validated on entry (square, finite) and treated as immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergence, NotHermitian, NotPSD

TOL_HERM = 1e-10
TOL_EIG = 1e-9
TOL_PSD = 1e-10
TOL_RAD = 1e-6
M_SQUARINGS = 40


def as_matrix(a) -> np.ndarray:
    """Validate and coerce input to a square complex matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def real_part(t) -> np.ndarray:
    """Hermitian part (T + T*)/2."""
    t = as_matrix(t)
    return (t + t.conj().T) / 2


@dataclass(frozen=True)
class HermitianEigen:
    eigenvalues: np.ndarray  # ascending, real
    vectors: np.ndarray      # columns are eigenvectors


@dataclass(frozen=True)
class SingularDecomposition:
    left: np.ndarray
    sigma: np.ndarray  # descending, nonnegative
    right: np.ndarray  # A = left @ diag(sigma) @ right*


def hermitian_eigen(h) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    h = as_matrix(h)
    dev = np.linalg.norm(h - h.conj().T)
    if dev > TOL_HERM * max(1.0, np.linalg.norm(h)):
        raise NotHermitian(f"deviation from Hermitian: {dev:.3e}")
    try:
        w, v = np.linalg.eigh((h + h.conj().T) / 2)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermitianEigen(eigenvalues=w, vectors=v)


def svd(a) -> SingularDecomposition:
    """Singular value decomposition A = U diag(sigma) V*."""
    a = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return SingularDecomposition(left=u, sigma=s, right=vh.conj().T)


def spectral_norm(a) -> float:
    """Operator norm: largest singular value."""
    a = as_matrix(a)
    if not a.size:
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False)[0])


def spectral_radius(a) -> float:
    """Largest eigenvalue modulus via Gelfand's formula.

    Uses repeated squaring with Frobenius renormalization at each of
    M_SQUARINGS steps; accurate to about TOL_RAD relative.
    """
    a = as_matrix(a)
    b = a.copy()
    log_scale = 0.0
    est_prev = None
    for k in range(M_SQUARINGS):
        nf = float(np.linalg.norm(b))
        if nf == 0.0:
            return 0.0
        b = b / nf
        b = b @ b
        log_scale = 2.0 * (log_scale + math.log(nf))
        nb = float(np.linalg.norm(b))
        if nb == 0.0:
            return 0.0
        est = math.exp((math.log(nb) + log_scale) / 2.0 ** (k + 1))
        if est_prev is not None and abs(est - est_prev) <= TOL_RAD * max(1.0, est):
            return est
        est_prev = est
    raise NoConvergence("spectral radius estimate did not settle within budget")


def frac_power(p, r: float) -> np.ndarray:
    """Fractional power P^r of a PSD matrix, with 0^r = 0.

    Eigenvalues in [-TOL_PSD * ||P||, 0) are clamped to zero; anything
    more negative raises NotPSD.  r = 0 is rejected: the natural limit
    (support projection vs identity) is ambiguous.
    """
    if r == 0:
        raise DomainError("exponent 0 is not defined for frac_power")
    if r < 0:
        raise DomainError("exponent must be nonnegative")
    eig = hermitian_eigen(p)
    w, v = eig.eigenvalues, eig.vectors
    scale = max(abs(w[0]), abs(w[-1]))
    if w[0] < -TOL_PSD * scale:
        raise NotPSD(f"eigenvalue {w[0]:.3e} below clamping window")
    w = np.clip(w, 0.0, None)
    out = (v * w**r) @ v.conj().T
    return (out + out.conj().T) / 2
