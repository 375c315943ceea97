import pytest

from diagsurf.ff import build_field


@pytest.fixture(scope="session")
def F4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def F9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def F16():
    return build_field(2, 4)
