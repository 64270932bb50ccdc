"""Brute-force field-of-values oracle.

The closure of the numerical range is convex, so it is the intersection of
its supporting half-planes ``x cos(theta) + y sin(theta) <= h(theta)`` where
``h(theta)`` is the largest eigenvalue of ``cos(theta) th + sin(theta) ts``.
The top eigenvector ``u`` gives the boundary point ``<t u, u>`` touching that
line. Sweeping ``theta`` traces the boundary; random unit vectors fill in
interior points.

Eigenproblems here go through the package's own Jacobi solver, so the
oracle stays independent of the LAPACK-backed norms used by the enclosures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .enclosure import EnclosureRegion, Polygon, Segment
from .linalg import CartesianPair, as_matrix, cartesian_split, hermitian_eigen, spectral_norm

DEFAULT_ANGLES = 720
DEFAULT_SAMPLES = 200
DEFAULT_RTOL = 1e-8

# unit normals of the rectangle and parallelogram sides
SLAB_DIRECTIONS = {
    "real": 0.0,
    "imag": math.pi / 2,
    "diag+": math.pi / 4,
    "diag-": -math.pi / 4,
}


@dataclass(frozen=True)
class FovSample:
    """Points of the numerical range collected by the oracle.

    ``boundary[k]`` is the boundary point on the supporting line with normal
    angle ``angles[k]`` and offset ``support[k]``.
    """

    angles: np.ndarray
    boundary: np.ndarray
    support: np.ndarray
    interior: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))

    @property
    def points(self) -> np.ndarray:
        return np.vstack([self.boundary, self.interior])

    @property
    def oracle_radius(self) -> float:
        pts = self.points
        return float(np.max(np.hypot(pts[:, 0], pts[:, 1]), initial=0.0))


def _points_for(pair: CartesianPair, u: np.ndarray) -> np.ndarray:
    """Rows ``(Re, Im)`` of ``<t u_k, u_k>`` for the rows ``u_k`` of ``u``."""
    x = np.einsum("ki,ij,kj->k", u.conj(), pair.th, u).real
    y = np.einsum("ki,ij,kj->k", u.conj(), pair.ts, u).real
    return np.column_stack([x, y])


def support_function(pair: CartesianPair, theta: float) -> tuple[float, np.ndarray]:
    """``h(theta)`` and a unit vector ``u`` whose ``<t u, u>`` attains it."""
    w, v = hermitian_eigen(pair.rotated(theta))
    return float(w[-1]), v[:, -1]


def sweep_angles(n_angles: int = DEFAULT_ANGLES) -> np.ndarray:
    """``2 pi k / n`` plus all multiples of ``pi/4`` (the slab normals and
    their opposites), sorted and without repeats."""
    if n_angles < 3:
        raise ValueError("n_angles must be at least 3")
    grid = 2 * np.pi * np.arange(n_angles) / n_angles
    extra = np.pi / 4 * np.arange(8)
    missing = [a for a in extra if np.min(np.abs(grid - a)) > 1e-12]
    return np.sort(np.concatenate([grid, missing]))


def boundary_sweep(pair: CartesianPair, n_angles: int = DEFAULT_ANGLES) -> FovSample:
    angles = sweep_angles(n_angles)
    stack = np.cos(angles)[:, None, None] * pair.th + np.sin(angles)[:, None, None] * pair.ts
    w, v = hermitian_eigen(stack)
    u = v[:, :, -1]
    return FovSample(angles, _points_for(pair, u), w[:, -1])


def _seed_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) % 2**64)


def random_unit_vectors(m: int, n: int, seed: int) -> np.ndarray:
    """``n`` unit vectors in C^m with i.i.d. complex Gaussian components
    (numpy PCG64 seeded with ``seed mod 2**64``)."""
    rng = _seed_rng(seed)
    z = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def interior_sample(t, n: int = DEFAULT_SAMPLES, seed: int = 0) -> np.ndarray:
    """``n`` points ``<t u, u>`` for random unit ``u``, as rows ``(x, y)``."""
    t = as_matrix(t)
    if n < 1:
        raise ValueError("n must be positive")
    u = random_unit_vectors(t.shape[0], n, seed)
    vals = np.einsum("ki,ij,kj->k", u.conj(), t, u)
    return np.column_stack([vals.real, vals.imag])


def numerical_radius(
    pair: CartesianPair,
    n_angles: int = DEFAULT_ANGLES,
    sweep: FovSample | None = None,
) -> tuple[float, np.ndarray]:
    """``max_theta h(theta)`` and a boundary point attaining it.

    Starts from the sweep maximum and polishes the angle with a bounded
    scalar search between the neighbouring sweep angles.
    """
    if sweep is None:
        sweep = boundary_sweep(pair, n_angles)
    k = int(np.argmax(sweep.support))
    best_h, best_pt = float(sweep.support[k]), sweep.boundary[k]
    lo = sweep.angles[k - 1] if k > 0 else sweep.angles[-1] - 2 * np.pi
    hi = sweep.angles[k + 1] if k + 1 < len(sweep.angles) else sweep.angles[0] + 2 * np.pi
    res = minimize_scalar(lambda th: -support_function(pair, th)[0], bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-12})
    h, u = support_function(pair, float(res.x))
    if h > best_h:
        best_h, best_pt = h, _points_for(pair, u[None, :])[0]
    return best_h, best_pt


def fov_sample(
    t,
    n_angles: int = DEFAULT_ANGLES,
    n_samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    refine: bool = True,
) -> FovSample:
    """Boundary sweep plus interior samples of ``W(t)``.

    With ``refine`` the point attaining the numerical radius is appended to
    the boundary, so :attr:`FovSample.oracle_radius` is not limited by the
    angular resolution of the sweep.
    """
    t = as_matrix(t)
    pair = cartesian_split(t)
    sweep = boundary_sweep(pair, n_angles)
    angles, boundary, support = sweep.angles, sweep.boundary, sweep.support
    if refine:
        h, pt = numerical_radius(pair, sweep=sweep)
        theta = math.atan2(pt[1], pt[0])
        angles = np.append(angles, theta)
        boundary = np.vstack([boundary, pt])
        support = np.append(support, support_function(pair, theta)[0])
    interior = interior_sample(t, n_samples, seed) if n_samples else np.empty((0, 2))
    return FovSample(angles, boundary, support, interior)


def containment_violation(region: EnclosureRegion, points) -> float:
    """Largest distance by which any point sits outside ``region`` (<= 0 if none)."""
    if isinstance(region, Segment):
        return float(np.max(region.distance(points)))
    return float(np.max(region.signed_distance(points)))


def contains(region: EnclosureRegion, point, tol: float = 0.0) -> bool:
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    return containment_violation(region, np.asarray(point, dtype=float).reshape(1, 2)) <= tol


@dataclass(frozen=True)
class TangencyReport:
    """Support of ``W(t)`` on both sides of one slab direction."""

    name: str
    angle: float
    offset: float
    support_plus: float
    support_minus: float
    tol: float

    @property
    def gap(self) -> float:
        return self.offset - max(self.support_plus, self.support_minus)

    @property
    def touches_plus(self) -> bool:
        return abs(self.offset - self.support_plus) <= self.tol

    @property
    def touches_minus(self) -> bool:
        return abs(self.offset - self.support_minus) <= self.tol

    @property
    def tangent(self) -> bool:
        return abs(self.gap) <= self.tol


def tangency_check(
    pair: CartesianPair,
    region: EnclosureRegion,
    n_angles: int = DEFAULT_ANGLES,
    tol: float | None = None,
    sweep: FovSample | None = None,
) -> list[TangencyReport]:
    """Compare the polygon's extent with the support of ``W(t)`` in each of the
    four slab directions.

    The region must be a polygon built with the spectral norm. The supports
    are read off a boundary sweep, which always contains the slab angles;
    pass ``sweep`` to reuse one already computed for ``pair``.
    """
    if not isinstance(region, Polygon):
        raise ValueError("tangency is only defined for polygon enclosures")
    if tol is None:
        tol = DEFAULT_RTOL * (1.0 + spectral_norm(pair.matrix))
    if sweep is None:
        sweep = boundary_sweep(pair, n_angles)

    def h_at(theta: float) -> float:
        theta %= 2 * np.pi
        k = int(np.argmin(np.abs(np.angle(np.exp(1j * (sweep.angles - theta))))))
        return float(sweep.support[k])

    reports = []
    for name, theta in SLAB_DIRECTIONS.items():
        d = (math.cos(theta), math.sin(theta))
        reports.append(TangencyReport(name, theta, region.support(d), h_at(theta), h_at(theta + np.pi), tol))
    return reports
