import numpy as np
import pytest

from numrange.ensemble import EnsembleConfig, run_size, to_csv, to_json, trial_matrix


def test_config_validation():
    with pytest.raises(ValueError):
        EnsembleConfig(trials=0)
    with pytest.raises(ValueError):
        EnsembleConfig(entry_range=0)
    with pytest.raises(ValueError):
        EnsembleConfig(sizes=())


def test_trial_matrix_is_deterministic_and_in_range():
    a = trial_matrix(3, 10, 7)
    np.testing.assert_array_equal(a, trial_matrix(3, 10, 7))
    assert not np.array_equal(a, trial_matrix(3, 10, 8))
    assert not np.array_equal(a, trial_matrix(4, 10, 7))
    big = trial_matrix(0, 200, 0, entry_range=2.5)
    assert np.abs(big.real).max() <= 2.5 and np.abs(big.imag).max() <= 2.5
    assert np.abs(big.real).max() > 2.4 and np.abs(big.imag).max() > 2.4


def test_means_do_not_depend_on_threads():
    cfg = EnsembleConfig(sizes=(6,), trials=24, seed=11)
    assert run_size(cfg, 6, jobs=1) == run_size(cfg, 6, jobs=4)


def test_serialization():
    cfg = EnsembleConfig(sizes=(5,), trials=3, seed=1)
    rows = [run_size(cfg, 5)]
    csv_text = to_csv(rows)
    assert csv_text.splitlines()[0] == "m,trials,kittaneh_power,kittaneh_mean,corollary"
    assert csv_text.splitlines()[1].startswith("5,3,")
    assert '"sizes": [\n      5\n    ]' in to_json(cfg, rows)
