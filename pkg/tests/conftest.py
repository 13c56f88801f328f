import pytest

from singmod import modulus, weber


@pytest.fixture(scope="session")
def g210():
    return weber.g2n(105, 60)


@pytest.fixture(scope="session")
def k210():
    return modulus.singular_modulus(210, 50)


@pytest.fixture(scope="session")
def k30():
    return modulus.singular_modulus(30, 50)
