import numpy as np
import pytest

from cylwigner import gauss_hermite


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def gh64():
    return gauss_hermite(64)
