import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.append((mark.args[0], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _criteria:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")


def random_complex(rng, m, scale=1.0):
    return scale * (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m)))


def random_hermitian(rng, m, scale=1.0):
    z = random_complex(rng, m, scale)
    return (z + z.conj().T) / 2


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_parts = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def complex_matrices(draw, min_dim=1, max_dim=6):
    m = draw(st.integers(min_dim, max_dim))
    re = draw(arrays(np.float64, (m, m), elements=_parts))
    im = draw(arrays(np.float64, (m, m), elements=_parts))
    return re + 1j * im
