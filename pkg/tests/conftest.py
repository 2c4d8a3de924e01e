import numpy as np
import pytest

from qruscheweyh import QClassSpec
from qruscheweyh.verify import default_spec_grid


@pytest.fixture
def ref_spec():
    """The worked-example parameter tuple used throughout the suite."""
    return QClassSpec(q=0.5, m=2, l=1, alpha=1.0, A=0.5, B=-0.5)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def spec_grid():
    """The full 108-point default parameter grid."""
    return default_spec_grid()


@pytest.fixture(scope="session")
def small_spec_grid():
    """A slice of the default grid covering every q, sign of B, and alpha."""
    grid = default_spec_grid()
    return grid[::13] + [grid[-1]]
