import numpy as np
import pytest

from monoindex import GridFunction


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def grid(values, M=1.0):
    return GridFunction(np.asarray(values, dtype=float), M)


def scale_of(*arrays) -> float:
    """Magnitude used to turn 'relative' float tolerances into absolute ones."""
    return max(1.0, *(float(np.max(np.abs(a))) for a in arrays))
