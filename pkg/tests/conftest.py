import pytest

from coho.realform import find_form, load_catalog


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def form(catalog):
    return lambda name: find_form(catalog, name)
