import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

from geochrom import CatalogStore

CACHE_DIR = Path(__file__).parent / ".catalog_cache"


@pytest.fixture(scope="session")
def store() -> CatalogStore:
    """Shared catalog store backed by an on-disk cache across test runs."""
    CACHE_DIR.mkdir(exist_ok=True)
    return CatalogStore(CACHE_DIR)
