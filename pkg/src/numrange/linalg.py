"""Dense complex matrix helpers: Cartesian split, Hermitian eigensolver, norms.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Functions that
accept a matrix validate it with :func:`as_matrix` (square, non-empty, finite)
and never modify their inputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionError,
    NormalizationError,
    NotHermitianError,
)

HERMITIAN_RTOL = 1e-12
UNIT_TOL = 1e-12
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 60


class NormKind(str, enum.Enum):
    SPECTRAL = "spectral"
    ONE = "one"
    INF = "inf"
    FROBENIUS = "frobenius"


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a read-only square complex128 array.

    Raises:
        DimensionError: if ``a`` is not a non-empty square 2-D array.
        ValueError: if any entry is NaN or infinite.
    """
    arr = np.array(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    arr.setflags(write=False)
    return arr


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    out = np.ascontiguousarray(as_matrix(a).conj().T)
    out.setflags(write=False)
    return out


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    out = a @ b
    out.setflags(write=False)
    return out


def hermitian_defect(h: np.ndarray) -> float:
    """Largest entrywise distance between ``h`` and its adjoint."""
    h = np.asarray(h)
    return float(np.max(np.abs(h - np.swapaxes(h, -1, -2).conj()), initial=0.0))


def is_hermitian(h, rtol: float = HERMITIAN_RTOL) -> bool:
    h = np.asarray(h)
    scale = 1.0 + float(np.max(np.abs(h), initial=0.0))
    return hermitian_defect(h) <= rtol * scale


@dataclass(frozen=True)
class CartesianPair:
    """Hermitian parts of ``t = th + 1j * ts``."""

    th: np.ndarray
    ts: np.ndarray

    def __post_init__(self):
        if self.th.shape != self.ts.shape:
            raise DimensionError("th and ts must have the same shape")
        for name in ("th", "ts"):
            if not is_hermitian(getattr(self, name)):
                raise NotHermitianError(f"{name} is not Hermitian")

    @property
    def dim(self) -> int:
        return self.th.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        """The reconstructed operator ``th + i ts``."""
        return self.th + 1j * self.ts

    def rotated(self, theta: float) -> np.ndarray:
        """``cos(theta) th + sin(theta) ts``, the Hermitian part of ``exp(-i theta) t``."""
        return np.cos(theta) * self.th + np.sin(theta) * self.ts


def cartesian_split(t) -> CartesianPair:
    t = as_matrix(t)
    t_adj = t.conj().T
    th = (t + t_adj) / 2
    d = t - t_adj
    # d/(2i) written out so that ts is exactly Hermitian
    ts = (d.imag - 1j * d.real) / 2
    th.setflags(write=False)
    ts.setflags(write=False)
    return CartesianPair(th, ts)


def quadratic_form(t, u) -> complex:
    """``<t u, u> = u^H t u`` for a unit vector ``u``."""
    t = as_matrix(t)
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (t.shape[0],):
        raise DimensionError(f"vector of length {t.shape[0]} expected, got shape {u.shape}")
    if abs(np.linalg.norm(u) - 1.0) > UNIT_TOL:
        raise NormalizationError(f"vector norm {np.linalg.norm(u)!r} is not 1")
    return complex(np.vdot(u, t @ u))


@dataclass(frozen=True)
class HermitianEigenResult:
    """Ascending eigenvalues and the matching unit eigenvectors (as columns).

    Both arrays may carry leading batch dimensions when the solver was given
    a stack of matrices.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __iter__(self):
        return iter((self.eigenvalues, self.eigenvectors))


def _jacobi_sweeps(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic complex Jacobi on a stack of Hermitian matrices, shape (n, m, m).

    Works in place on ``a`` (diagonalized) and returns the accumulated
    unitary ``v`` with ``a_in = v diag(a_out) v^H``.
    """
    n, m, _ = a.shape
    v = np.broadcast_to(np.eye(m, dtype=np.complex128), a.shape).copy()
    offmask = ~np.eye(m, dtype=bool)
    fro = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
    thresh = tol * fro
    tiny = np.finfo(float).tiny

    def off_norm(x):
        return np.sqrt(np.sum(np.abs(x[:, offmask]) ** 2, axis=1))

    active = np.flatnonzero(off_norm(a) > thresh)
    sweeps = 0
    while active.size:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"({active.size} of {n} matrices unfinished)"
            )
        sub = a[active]
        vs = v[active]
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = sub[:, p, q]
                mag = np.abs(apq)
                live = mag > tiny
                safe = np.where(live, mag, 1.0)
                phase = np.where(live, apq / safe, 1.0)
                app = sub[:, p, p].real
                aqq = sub[:, q, q].real
                tau = (aqq - app) / (2.0 * safe)
                sgn = np.where(tau >= 0.0, 1.0, -1.0)
                tt = sgn / (np.abs(tau) + np.hypot(1.0, tau))
                c = np.where(live, 1.0 / np.hypot(1.0, tt), 1.0)
                s = np.where(live, tt * c, 0.0)
                # 2x2 unitary acting on columns p, q
                u00 = c
                u01 = s
                u10 = -s * phase.conj()
                u11 = c * phase.conj()

                cp = sub[:, :, p].copy()
                cq = sub[:, :, q]
                sub[:, :, p] = cp * u00[:, None] + cq * u10[:, None]
                sub[:, :, q] = cp * u01[:, None] + cq * u11[:, None]
                rp = sub[:, p, :].copy()
                rq = sub[:, q, :]
                sub[:, p, :] = rp * u00[:, None] + rq * u10.conj()[:, None]
                sub[:, q, :] = rp * u01[:, None] + rq * u11.conj()[:, None]
                sub[:, p, q] = 0.0
                sub[:, q, p] = 0.0
                sub[:, p, p] = sub[:, p, p].real
                sub[:, q, q] = sub[:, q, q].real

                vp = vs[:, :, p].copy()
                vq = vs[:, :, q]
                vs[:, :, p] = vp * u00[:, None] + vq * u10[:, None]
                vs[:, :, q] = vp * u01[:, None] + vq * u11[:, None]
        a[active] = sub
        v[active] = vs
        sweeps += 1
        still = off_norm(sub) > thresh[active]
        active = active[still]
    return v


def _eigh_jacobi(h: np.ndarray, tol: float, max_sweeps: int):
    batch = h.shape[:-2]
    m = h.shape[-1]
    a = np.array(h.reshape(-1, m, m), dtype=np.complex128)
    v = _jacobi_sweeps(a, tol, max_sweeps)
    w = np.diagonal(a, axis1=1, axis2=2).real.copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return w.reshape(*batch, m), v.reshape(*batch, m, m)


def hermitian_eigen(
    h,
    method: str = "jacobi",
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> HermitianEigenResult:
    """Full eigendecomposition of a Hermitian matrix or a stack of them.

    ``method="jacobi"`` runs the cyclic complex Jacobi iteration implemented
    here (stacks are rotated together, one vectorized pass per pivot);
    ``method="lapack"`` defers to :func:`numpy.linalg.eigh`.

    Raises:
        NotHermitianError: if any input matrix is not Hermitian within
            ``1e-12 * (1 + max|entry|)``.
        ConvergenceError: if Jacobi has not converged after ``max_sweeps``.
    """
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2] or h.shape[-1] < 1:
        raise DimensionError(f"expected square matrices, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("matrix entries must be finite")
    scale = 1.0 + np.max(np.abs(h), axis=(-2, -1))
    defect = np.max(np.abs(h - np.swapaxes(h, -1, -2).conj()), axis=(-2, -1))
    if np.any(defect > HERMITIAN_RTOL * scale):
        raise NotHermitianError(f"matrix is not Hermitian (defect {np.max(defect):.3g})")
    h = (h + np.swapaxes(h, -1, -2).conj()) / 2
    if method == "jacobi":
        w, v = _eigh_jacobi(h, tol, max_sweeps)
    elif method == "lapack":
        w, v = np.linalg.eigh(h)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return HermitianEigenResult(w, v)


def lambda_max(h, method: str = "lapack") -> float:
    """Largest eigenvalue of a Hermitian matrix."""
    if method == "lapack":
        return float(np.linalg.eigvalsh(np.asarray(h))[-1])
    return float(hermitian_eigen(h, method=method).eigenvalues[-1])


def norm(t, kind: NormKind | str = NormKind.SPECTRAL, method: str = "lapack") -> float:
    """Matrix norm of ``t``.

    The spectral norm is computed as ``sqrt(lambda_max(t^H t))``; ``method``
    picks the eigensolver used for it (see :func:`hermitian_eigen`).
    """
    t = as_matrix(t)
    kind = NormKind(kind)
    if kind is NormKind.SPECTRAL:
        gram = t.conj().T @ t
        gram = (gram + gram.conj().T) / 2
        return float(np.sqrt(max(lambda_max(gram, method=method), 0.0)))
    if kind is NormKind.ONE:
        return float(np.max(np.sum(np.abs(t), axis=0)))
    if kind is NormKind.INF:
        return float(np.max(np.sum(np.abs(t), axis=1)))
    return float(np.sqrt(np.sum(np.abs(t) ** 2)))


def spectral_norm(t, method: str = "lapack") -> float:
    return norm(t, NormKind.SPECTRAL, method=method)


def random_hermitian(rng: np.random.Generator, m: int, scale: float = 1.0) -> np.ndarray:
    z = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    return scale * (z + z.conj().T) / 2
