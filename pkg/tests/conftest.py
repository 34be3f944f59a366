import pytest

from ambrel.catalog import boolean_square, chain
from ambrel.hyperspace import space


@pytest.fixture(scope="session")
def x2():
    return space("x1", "x2")


@pytest.fixture(scope="session")
def y2():
    return space("y1", "y2")


@pytest.fixture(scope="session")
def z2():
    return space("z1", "z2")


@pytest.fixture(scope="session")
def x3():
    return space("x1", "x2", "x3")


@pytest.fixture(scope="session")
def y3():
    return space("y1", "y2", "y3")


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def square():
    return boolean_square()
