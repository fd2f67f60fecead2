import pytest

from segre import QQ, PrimeField


@pytest.fixture(scope="session")
def fp():
    return PrimeField(10007)


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def qq():
    return QQ
