"""Upper bounds on the numerical radius ``w(t)``.

=============== ============================================
classical       ``||t||``
kittaneh_power  ``(||t|| + ||t^2||^(1/2)) / 2``
kittaneh_mean   ``(||t^H t + t t^H|| / 2)^(1/2)``
corollary       largest vertex modulus of the norm polygon
=============== ============================================

All norms are spectral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enclosure import corollary_radius_bound, segment_radius
from .errors import ZeroOperatorError
from .linalg import as_matrix, cartesian_split, spectral_norm

RATIO_KEYS = ("kittaneh_power", "kittaneh_mean", "corollary")


def bound_classical(t) -> float:
    return spectral_norm(t)


def bound_kittaneh_power(t) -> float:
    t = as_matrix(t)
    return 0.5 * (spectral_norm(t) + math.sqrt(spectral_norm(t @ t)))


def bound_kittaneh_mean(t) -> float:
    t = as_matrix(t)
    t_adj = t.conj().T
    return math.sqrt(spectral_norm(t_adj @ t + t @ t_adj) / 2)


def bound_corollary(t) -> float:
    """Polygon bound; ``|c| ||q||`` when ``t = c q`` with ``q`` Hermitian."""
    pair = cartesian_split(t)
    radius = segment_radius(pair)
    if radius is not None:
        return radius
    return corollary_radius_bound(pair).bound


@dataclass(frozen=True)
class BoundReport:
    spectral_norm: float
    kittaneh_power: float
    kittaneh_mean: float
    corollary: float
    ratios: dict[str, float] | None = None

    @property
    def classical(self) -> float:
        return self.spectral_norm

    def as_dict(self) -> dict:
        out = {
            "spectral_norm": self.spectral_norm,
            "classical": self.classical,
            "kittaneh_power": self.kittaneh_power,
            "kittaneh_mean": self.kittaneh_mean,
            "corollary": self.corollary,
        }
        if self.ratios is not None:
            out["ratios"] = dict(self.ratios)
        return out


def bound_report(t, with_ratios: bool = True) -> BoundReport:
    """All four bounds, and their ratios to ``||t||`` when ``with_ratios``.

    Raises:
        ZeroOperatorError: if ``t`` is zero and ratios were requested.
    """
    t = as_matrix(t)
    sn = spectral_norm(t)
    values = {
        "kittaneh_power": bound_kittaneh_power(t),
        "kittaneh_mean": bound_kittaneh_mean(t),
        "corollary": bound_corollary(t),
    }
    ratios = None
    if with_ratios:
        if sn == 0.0:
            raise ZeroOperatorError("ratios are undefined for the zero matrix")
        ratios = {k: values[k] / sn for k in RATIO_KEYS}
    return BoundReport(sn, ratios=ratios, **values)
