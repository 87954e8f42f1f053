import pytest

from orbit_atlas.catalog import load_catalog


@pytest.fixture(scope="session")
def catalogs():
    return {n: load_catalog(n) for n in (1, 2, 3, 4)}
