import random

import pytest

from ssa_codes.config import get_settings


@pytest.fixture
def override_settings(monkeypatch):
    """Set SSA_* environment variables for one test and rebuild the cached settings"""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"SSA_{key.upper()}", str(value))
        get_settings.cache_clear()

    yield apply
    monkeypatch.undo()
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return random.Random(20240607)
