import numpy as np
import pytest

from convexdist import unit_cube, unit_simplex, unit_square


@pytest.fixture(scope="session")
def square():
    return unit_square()


@pytest.fixture(scope="session")
def simplex2():
    return unit_simplex(2)


@pytest.fixture(scope="session")
def cube():
    return unit_cube()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
