import numpy as np
import pytest

from wedgebench.numerics import GridFunction


@pytest.fixture
def lorentzian() -> GridFunction:
    """Causal Lorentzian a(w) = 1/(-w - i) on the reference grid."""
    w = np.linspace(-50.0, 50.0, 4096)
    return GridFunction(1.0 / (-w - 1j), -50.0, 50.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(7)
