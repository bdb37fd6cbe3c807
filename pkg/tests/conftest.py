"""Shared fixtures and the seeded random-dataset generator used across tests."""
import numpy as np
import pytest

from datacomplexity import Dataset, build_dataset, fixture


@pytest.fixture
def sep4() -> Dataset:
    return fixture("SEP4")


@pytest.fixture
def xor4() -> Dataset:
    return fixture("XOR4")


@pytest.fixture
def dup4() -> Dataset:
    return fixture("DUP4")


@pytest.fixture(scope="session")
def wdbc() -> Dataset:
    return fixture("WDBC")


def random_dataset(rng: np.random.Generator, n_min=4, n_max=60, m_min=1, m_max=8):
    """Random continuous dataset with at least two instances per class."""
    n = int(rng.integers(n_min, n_max + 1))
    m = int(rng.integers(m_min, m_max + 1))
    X = rng.normal(size=(n, m)) * rng.uniform(0.5, 20.0, size=m)
    while True:
        y = rng.integers(0, 2, size=n)
        if 2 <= y.sum() <= n - 2:
            break
    return build_dataset(X, y)
