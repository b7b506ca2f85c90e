import pytest
from pydantic import ValidationError

from services.base_service import BaseService
from services.config import Settings, SettingsManager, get_settings
from services.errors import ResourceBoundError


def test_defaults():
    settings = Settings()
    assert settings.threads == 1
    assert settings.log_level == 'WARNING'
    assert not settings.progress


def test_environment(monkeypatch):
    monkeypatch.setenv('FORMEDFLAGS_MAX_GROUP_SIZE', '120')
    monkeypatch.setenv('FORMEDFLAGS_LOG_LEVEL', 'debug')
    SettingsManager.reset()
    settings = get_settings()
    assert settings.max_group_size == 120
    assert settings.log_level == 'DEBUG'


def test_override_keeps_unset_values():
    SettingsManager().override(threads=3, max_oracle_ops=None)
    settings = get_settings()
    assert settings.threads == 3
    assert settings.max_oracle_ops == Settings().max_oracle_ops


def test_invalid_values():
    with pytest.raises(ValidationError):
        Settings(threads=0)
    with pytest.raises(ValidationError):
        Settings(log_level='chatty')


def test_manager_is_a_singleton():
    assert SettingsManager() is SettingsManager()


class TestBaseService:
    def test_bound(self, tight_settings):
        service = BaseService(tight_settings(max_group_size=10))
        service.check_bound('group_size', 10)
        with pytest.raises(ResourceBoundError) as info:
            service.check_bound('group_size', 11)
        assert info.value.limit == 10

    def test_cache(self):
        service = BaseService()
        calls = []
        service.invalidate_cache('answer')
        assert service.cached('answer', lambda: calls.append(1) or 42) == 42
        assert service.cached('answer', lambda: calls.append(1) or 0) == 42
        assert calls == [1]
        service.invalidate_cache()
        assert service.get_cached_data('answer') is None

    def test_map_chunks_serial(self):
        assert BaseService().map_chunks(abs, [-1, 2, -3]) == [1, 2, 3]
