"""Reference matrices used in the docs, plots and regression tests."""

from __future__ import annotations

import numpy as np

from .matrixio import loads_text

# 4x4 example whose range the octagon hugs closely
SAMPLE_A_TEXT = """\
2-4i  -4+4i  -4-i   3-i
1-3i  -1     -2+2i  5i
-2i   4-i    -1-2i  3-4i
4-4i  -4i    1-3i   2+5i
"""

# 4x4 example with a visibly looser octagon
SAMPLE_B_TEXT = """\
4-i    -3+2i  3+5i   -2+3i
-1-i   0      1-4i   -3-2i
-4+4i  1-4i   -4i    -2
4+i    4+i    2+2i   1
"""

NILPOTENT = np.array([[0, 1], [0, 0]], dtype=complex)
RANK_ONE = np.array([[1, 1], [0, 0]], dtype=complex)
NORMAL_DIAG = np.diag([1 + 1j, -0.5j])


def sample_a() -> np.ndarray:
    return loads_text(SAMPLE_A_TEXT)


def sample_b() -> np.ndarray:
    return loads_text(SAMPLE_B_TEXT)
