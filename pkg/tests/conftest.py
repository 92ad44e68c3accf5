import pytest

from qpm.algebra import Params
from qpm.duality import Theory


@pytest.fixture(scope="session")
def P12():
    return Params(1, 2)


@pytest.fixture(scope="session")
def P13():
    return Params(1, 3)


@pytest.fixture(scope="session")
def P23():
    return Params(2, 3)


@pytest.fixture(scope="session")
def T12(P12):
    return Theory(P12)


@pytest.fixture(scope="session")
def T23(P23):
    return Theory(P23)
