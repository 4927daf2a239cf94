import pathlib

import pytest

from polydouble.catalog import built_in_catalog

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def catalog():
    """The verification catalog, built once per test session."""
    return built_in_catalog()


@pytest.fixture(scope="session")
def pentagon_hrep_path():
    return str(DATA / "pentagon_hrep.json")


@pytest.fixture(scope="session")
def c5_complex_path():
    return str(DATA / "c5_complex.json")
