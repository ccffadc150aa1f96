import pytest

from charsum import context


@pytest.fixture(scope="session")
def ctx31():
    return context(3, 1)


@pytest.fixture(scope="session")
def ctx51():
    return context(5, 1)


@pytest.fixture(scope="session")
def ctx71():
    return context(7, 1)


@pytest.fixture(scope="session")
def ctx32():
    return context(3, 2)
