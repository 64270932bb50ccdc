"""Random-matrix comparison of the bound ratios ``bound / ||t||``.

Trial ``k`` for size ``m`` draws its matrix from a generator seeded with
``SeedSequence([seed, m, k])``, so every trial is reproducible on its own
and the per-size means do not depend on evaluation order or parallelism.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .bounds import RATIO_KEYS, bound_report

DEFAULT_SIZES = (10, 100)
FULL_SIZES = (10, 100, 500, 1000)


@dataclass(frozen=True)
class EnsembleConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    trials: int = 1000
    seed: int = 0
    entry_range: float = 4.0

    def __post_init__(self):
        if not self.sizes or any(m < 1 for m in self.sizes):
            raise ValueError("sizes must be positive integers")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.entry_range > 0:
            raise ValueError("entry_range must be positive")


@dataclass(frozen=True)
class EnsembleRow:
    m: int
    trials: int
    kittaneh_power: float
    kittaneh_mean: float
    corollary: float


def trial_matrix(seed: int, m: int, k: int, entry_range: float = 4.0) -> np.ndarray:
    """Matrix with real and imaginary parts i.i.d. uniform on ``[-r, r]``."""
    rng = np.random.default_rng(np.random.SeedSequence([int(seed) % 2**64, m, k]))
    re = rng.uniform(-entry_range, entry_range, (m, m))
    im = rng.uniform(-entry_range, entry_range, (m, m))
    return re + 1j * im


def trial_ratios(seed: int, m: int, k: int, entry_range: float = 4.0) -> np.ndarray:
    ratios = bound_report(trial_matrix(seed, m, k, entry_range)).ratios
    return np.array([ratios[key] for key in RATIO_KEYS])


def run_size(config: EnsembleConfig, m: int, jobs: int = 1) -> EnsembleRow:
    def one(k):
        return trial_ratios(config.seed, m, k, config.entry_range)

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            per_trial = list(pool.map(one, range(config.trials)))
    else:
        per_trial = [one(k) for k in range(config.trials)]
    means = np.mean(np.vstack(per_trial), axis=0)
    return EnsembleRow(m, config.trials, *map(float, means))


def run_ensemble(config: EnsembleConfig, jobs: int = 1) -> list[EnsembleRow]:
    return [run_size(config, m, jobs) for m in config.sizes]


def to_json(config: EnsembleConfig, rows: list[EnsembleRow]) -> str:
    doc = {"config": {**asdict(config), "sizes": list(config.sizes)}, "rows": [asdict(r) for r in rows]}
    return json.dumps(doc, indent=2)


def to_csv(rows: list[EnsembleRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "trials", *RATIO_KEYS])
    for r in rows:
        writer.writerow([r.m, r.trials, *(f"{v:.6f}" for v in (r.kittaneh_power, r.kittaneh_mean, r.corollary))])
    return buf.getvalue()
