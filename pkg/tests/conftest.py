import pytest

from services.config import Settings, SettingsManager
from services.counting import CountingService, FormedSpaceSpec


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from the environment defaults; CLI overrides never leak"""
    SettingsManager.reset()
    yield
    SettingsManager.reset()


@pytest.fixture
def counting() -> CountingService:
    return CountingService()


@pytest.fixture
def tight_settings():
    def build(**bounds) -> Settings:
        return Settings(**bounds)

    return build


@pytest.fixture
def sp6_forms() -> FormedSpaceSpec:
    return FormedSpaceSpec('symplectic', 6, None, {4})
