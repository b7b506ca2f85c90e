import logging
import os
from typing import Any

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)
load_dotenv()

LOG_LEVELS = {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}


class Settings(BaseModel):
    threads: int = Field(default=1, ge=1)
    max_group_size: int = Field(default=10**7, ge=1)
    max_oracle_ops: int = Field(default=10**8, ge=1)
    max_coxeter_rank: int = Field(default=9, ge=1)
    max_fiber_n: int = Field(default=14, ge=1)
    log_level: str = 'WARNING'
    progress: bool = False

    @field_validator('log_level')
    @classmethod
    def _validate_log_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"Unknown log level {value}. Supported levels: {', '.join(sorted(LOG_LEVELS))}")
        return value

    @classmethod
    def from_env(cls) -> "Settings":
        """Read the FORMEDFLAGS_* variables, falling back to the defaults"""
        values = {
            'threads': os.getenv('FORMEDFLAGS_THREADS'),
            'max_group_size': os.getenv('FORMEDFLAGS_MAX_GROUP_SIZE'),
            'max_oracle_ops': os.getenv('FORMEDFLAGS_MAX_ORACLE_OPS'),
            'max_coxeter_rank': os.getenv('FORMEDFLAGS_MAX_COXETER_RANK'),
            'max_fiber_n': os.getenv('FORMEDFLAGS_MAX_FIBER_N'),
            'log_level': os.getenv('FORMEDFLAGS_LOG_LEVEL'),
            'progress': os.getenv('FORMEDFLAGS_PROGRESS'),
        }
        return cls(**{key: value for key, value in values.items() if value not in (None, '')})


class SettingsManager:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            try:
                cls._instance.settings = Settings.from_env()
                logger.debug(f"Settings loaded: {cls._instance.settings.model_dump()}")
            except Exception as e:
                cls._instance = None
                logger.error(f"Error loading settings: {str(e)}")
                raise
        return cls._instance

    @property
    def get_settings(self) -> Settings:
        return self.settings

    def override(self, **values: Any) -> Settings:
        """Replace selected settings for the rest of the process; None leaves a value unchanged"""
        updates = {key: value for key, value in values.items() if value is not None}
        if updates:
            self.settings = Settings(**{**self.settings.model_dump(), **updates})
        return self.settings

    @classmethod
    def reset(cls) -> None:
        cls._instance = None


def get_settings() -> Settings:
    return SettingsManager().get_settings
