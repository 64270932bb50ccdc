"""Norm-based polygons enclosing the numerical range.

The range of ``t = th + i ts`` lies in the rectangle ``|x| <= ||th||``,
``|y| <= ||ts||`` and in every parallelogram
``|a x + b y| <= ||a th + b ts||``, ``|g x - d y| <= ||g th - d ts||`` with
positive parameters. Intersecting the rectangle with the parallelogram for
``a = b = g = d = 1`` cuts the rectangle's corners and gives a centrally
symmetric quadrilateral, hexagon or octagon whose vertices have a closed
form in the four norms ``||th||``, ``||ts||``, ``||th + ts||``, ``||th - ts||``.

If ``t = c q`` with ``q`` Hermitian, ``th`` and ``ts`` are real multiples of
each other and the range collapses onto the segment ``[-c||q||, c||q||]``;
:func:`octagon_closed_form` returns a :class:`Segment` then.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DegenerateOperatorError, EmptyIntersectionError
from .linalg import CartesianPair, NormKind, norm, spectral_norm

DEGENERATE_TOL = 1e-10
DEDUP_RTOL = 1e-9


class Shape(str, enum.Enum):
    QUADRILATERAL = "quadrilateral"
    HEXAGON = "hexagon"
    OCTAGON = "octagon"

    @classmethod
    def from_count(cls, n: int) -> "Shape":
        try:
            return {4: cls.QUADRILATERAL, 6: cls.HEXAGON, 8: cls.OCTAGON}[n]
        except KeyError:
            raise DegenerateOperatorError(f"polygon with {n} vertices cannot be classified") from None


@dataclass(frozen=True)
class HalfPlane:
    """The slab ``|a x + b y| <= c`` between two parallel lines."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("slab normal must be nonzero")
        if not self.c >= 0:
            raise ValueError(f"slab offset must be nonnegative, got {self.c}")

    @property
    def unit_offset(self) -> float:
        """Offset of the slab sides measured along the unit normal."""
        return self.c / math.hypot(self.a, self.b)


@dataclass(frozen=True)
class Polygon:
    """Convex polygon, vertices counterclockwise as rows of an (n, 2) array."""

    vertices: np.ndarray
    shape: Shape

    kind = property(lambda self: self.shape.value)

    def __len__(self):
        return len(self.vertices)

    def edge_normals(self) -> tuple[np.ndarray, np.ndarray]:
        """Unit outward normals of every edge and the edge offsets along them."""
        v = self.vertices
        e = np.roll(v, -1, axis=0) - v
        n = np.column_stack([e[:, 1], -e[:, 0]])
        n /= np.linalg.norm(n, axis=1, keepdims=True)
        return n, np.einsum("ij,ij->i", n, v)

    def signed_distance(self, points) -> np.ndarray:
        """Largest outward distance of each point past an edge line.

        Negative inside, zero on the boundary, positive outside (for points
        outside this is a lower bound of the Euclidean distance).
        """
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        n, off = self.edge_normals()
        return np.max(pts @ n.T - off, axis=1)

    def support(self, direction) -> float:
        """``max_v <v, direction>`` over the vertices."""
        return float(np.max(self.vertices @ np.asarray(direction, dtype=float)))

    def max_modulus(self) -> float:
        return float(np.max(np.hypot(self.vertices[:, 0], self.vertices[:, 1])))


@dataclass(frozen=True)
class Segment:
    """Closed segment from ``-endpoint`` to ``+endpoint`` in the complex plane."""

    endpoint: complex

    kind = "segment"

    @property
    def vertices(self) -> np.ndarray:
        e = self.endpoint
        return np.array([[-e.real, -e.imag], [e.real, e.imag]])

    def distance(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        e = np.array([self.endpoint.real, self.endpoint.imag])
        ee = float(e @ e)
        if ee == 0.0:
            return np.hypot(pts[:, 0], pts[:, 1])
        s = np.clip(pts @ e / ee, -1.0, 1.0)
        return np.linalg.norm(pts - s[:, None] * e, axis=1)

    def max_modulus(self) -> float:
        return abs(self.endpoint)


EnclosureRegion = Union[Polygon, Segment]


@dataclass(frozen=True)
class RadiusBoundDetail:
    eta1: float
    eta2: float
    norm_th: float
    norm_ts: float

    @property
    def bound(self) -> float:
        return math.sqrt(max(self.eta1**2 + self.norm_th**2, self.eta2**2 + self.norm_ts**2))


def dedup_epsilon(pair: CartesianPair, kind: NormKind | str = NormKind.SPECTRAL) -> float:
    return DEDUP_RTOL * (1.0 + norm(pair.matrix, kind))


def degenerate_multiple(pair: CartesianPair, tol: float = DEGENERATE_TOL):
    """Detect ``t = c q`` with ``q`` Hermitian.

    ``th`` and ``ts`` are fitted against each other by least squares (the
    larger one in Frobenius norm serves as the basis) and accepted as
    dependent when the residual is below ``tol * (1 + ||th||_F + ||ts||_F)``.

    Returns:
        ``(c, q)`` or ``None`` when ``th`` and ``ts`` are independent.
    """
    th, ts = pair.th, pair.ts
    fh = np.linalg.norm(th)
    fs = np.linalg.norm(ts)
    limit = tol * (1.0 + fh + fs)
    if fh <= limit and fs <= limit:
        return 0j, np.zeros_like(th)
    if fh >= fs:
        r = float(np.vdot(th, ts).real) / fh**2
        if np.linalg.norm(ts - r * th) <= limit:
            return complex(1.0, r), th
    else:
        r = float(np.vdot(ts, th).real) / fs**2
        if np.linalg.norm(th - r * ts) <= limit:
            return complex(r, 1.0), ts
    return None


def rectangle(pair: CartesianPair, kind: NormKind | str = NormKind.SPECTRAL) -> tuple[HalfPlane, HalfPlane]:
    return HalfPlane(1.0, 0.0, norm(pair.th, kind)), HalfPlane(0.0, 1.0, norm(pair.ts, kind))


def parallelogram(
    pair: CartesianPair,
    kind: NormKind | str = NormKind.SPECTRAL,
    alpha: float = 1.0,
    beta: float = 1.0,
    gamma: float = 1.0,
    delta: float = 1.0,
) -> tuple[HalfPlane, HalfPlane]:
    """Slabs ``|alpha x + beta y| <= ||alpha th + beta ts||`` and
    ``|gamma x - delta y| <= ||gamma th - delta ts||``.

    Raises:
        ValueError: if a parameter is not strictly positive.
        DegenerateOperatorError: if a slab has (numerically) zero width.
    """
    if min(alpha, beta, gamma, delta) <= 0:
        raise ValueError("parallelogram parameters must be positive")
    first = norm(alpha * pair.th + beta * pair.ts, kind)
    second = norm(gamma * pair.th - delta * pair.ts, kind)
    eps = dedup_epsilon(pair, kind) * max(alpha, beta, gamma, delta)
    if first <= eps or second <= eps:
        raise DegenerateOperatorError("parallelogram has zero width; operator is a multiple of a Hermitian matrix")
    return HalfPlane(alpha, beta, first), HalfPlane(gamma, -delta, second)


def _dedup(verts: list[np.ndarray], eps: float, cyclic: bool = True) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for v in verts:
        if not out or np.linalg.norm(v - out[-1]) > eps:
            out.append(v)
    while cyclic and len(out) > 1 and np.linalg.norm(out[0] - out[-1]) <= eps:
        out.pop()
    return out


def _canonical_start(verts: np.ndarray, eps: float) -> np.ndarray:
    """Rotate so the rightmost (then lowest) vertex comes first."""
    xmax = verts[:, 0].max()
    cand = np.flatnonzero(verts[:, 0] >= xmax - eps)
    start = cand[np.argmin(verts[cand, 1])]
    return np.roll(verts, -start, axis=0)


def _make_polygon(verts: list[np.ndarray], eps: float) -> Polygon:
    arr = _canonical_start(np.array(verts, dtype=float), eps)
    arr.setflags(write=False)
    return Polygon(arr, Shape.from_count(len(arr)))


def _clip(poly: list[np.ndarray], a: float, b: float, c: float) -> list[np.ndarray]:
    """Sutherland-Hodgman step: keep the part with ``a x + b y <= c``."""
    out: list[np.ndarray] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i - 1], poly[i]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fq <= 0:
            if fp > 0:
                out.append(p + (fp / (fp - fq)) * (q - p))
            out.append(q)
        elif fp <= 0:
            out.append(p + (fp / (fp - fq)) * (q - p))
    return out


def clip_intersection(slabs: Sequence[HalfPlane], eps: float | None = None) -> Polygon:
    """Intersection of centered slabs as a counterclockwise convex polygon.

    The first two non-parallel slabs give a starting parallelogram (the
    rectangle, for the usual slab order), which is then clipped by both sides
    of every remaining slab. Vertices closer than ``eps`` are merged; the
    default is ``1e-9 * (1 + largest slab offset)``.
    """
    slabs = list(slabs)
    if eps is None:
        eps = DEDUP_RTOL * (1.0 + max((s.unit_offset for s in slabs), default=0.0))
    for j in range(1, len(slabs)):
        s1, s2 = slabs[0], slabs[j]
        det = s1.a * s2.b - s1.b * s2.a
        if abs(det) > 1e-12 * math.hypot(s1.a, s1.b) * math.hypot(s2.a, s2.b):
            break
    else:
        raise EmptyIntersectionError("need two non-parallel slabs to bound a region")
    basis = np.array([[s1.a, s1.b], [s2.a, s2.b]])
    # (+,+), (-,+), (-,-), (+,-) is counterclockwise when det > 0
    signs = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
    if det < 0:
        signs.reverse()
    poly = [np.linalg.solve(basis, [u * s1.c, w * s2.c]) for u, w in signs]
    for k, s in enumerate(slabs):
        if k in (0, j):
            continue
        poly = _clip(poly, s.a, s.b, s.c)
        poly = _clip(poly, -s.a, -s.b, s.c)
        if not poly:
            raise EmptyIntersectionError("clipping removed every vertex")
    poly = _dedup(poly, eps)
    if not poly:
        raise EmptyIntersectionError("clipping removed every vertex")
    if len(poly) < 3:
        raise DegenerateOperatorError("slab intersection has no interior")
    return _make_polygon(poly, eps)


def _four_norms(pair: CartesianPair, kind) -> tuple[float, float, float, float]:
    return (
        norm(pair.th, kind),
        norm(pair.ts, kind),
        norm(pair.th + pair.ts, kind),
        norm(pair.th - pair.ts, kind),
    )


def octagon_closed_form(pair: CartesianPair, kind: NormKind | str = NormKind.SPECTRAL) -> EnclosureRegion:
    """Rectangle-cut-by-parallelogram polygon from its closed-form vertices.

    Falls back to the :class:`Segment` ``[-c||q||, c||q||]`` (spectral norm of
    ``q`` whatever ``kind`` is) when ``t = c q`` with ``q`` Hermitian.
    """
    found = degenerate_multiple(pair)
    if found is not None:
        c, q = found
        return Segment(complex(c * spectral_norm(q)))
    h, s, p, d = _four_norms(pair, kind)
    # right side (lower, upper), then top side (right, left)
    half = [
        np.array([h, h - d]),
        np.array([h, p - h]),
        np.array([p - s, s]),
        np.array([s - d, s]),
    ]
    eps = dedup_epsilon(pair, kind)
    half = _dedup(half, eps, cyclic=False)
    # the chain continues with the reflection of its first vertex
    if len(half) > 1 and np.linalg.norm(half[-1] + half[0]) <= eps:
        half.pop()
    if len(half) < 2:
        raise DegenerateOperatorError("closed-form polygon collapsed")
    return _make_polygon(half + [-v for v in half], eps)


def corollary_radius_bound(pair: CartesianPair, kind: NormKind | str = NormKind.SPECTRAL) -> RadiusBoundDetail:
    """Largest vertex modulus of the closed-form polygon, via the two
    norm-difference quantities ``eta1`` (horizontal) and ``eta2`` (vertical).

    Raises:
        DegenerateOperatorError: for ``t = c q``; use :func:`segment_radius`.
    """
    if degenerate_multiple(pair) is not None:
        raise DegenerateOperatorError("operator is a multiple of a Hermitian matrix")
    h, s, p, d = _four_norms(pair, kind)
    eta1 = max(abs(p - h), abs(d - h))
    eta2 = max(abs(p - s), abs(d - s))
    return RadiusBoundDetail(eta1, eta2, h, s)


def segment_radius(pair: CartesianPair) -> float | None:
    """``|c| ||q||`` if ``t = c q`` with ``q`` Hermitian, else ``None``."""
    found = degenerate_multiple(pair)
    if found is None:
        return None
    c, q = found
    return abs(c) * spectral_norm(q)
