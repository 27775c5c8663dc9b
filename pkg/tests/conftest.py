import pytest

from permres.modular import prime_fields


@pytest.fixture(scope="session")
def field():
    return prime_fields(0, 1)[0]


@pytest.fixture(scope="session")
def field_pair():
    return prime_fields(12345, 2)
