from .base import CommandMiddleware, MiddlewareGroup
from .exit_codes import EXIT_FALSIFIED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, ExitCodeMiddleware
from .logging_setup import StderrLoggingMiddleware

__all__ = [
    'CommandMiddleware',
    'MiddlewareGroup',
    'ExitCodeMiddleware',
    'StderrLoggingMiddleware',
    'EXIT_OK',
    'EXIT_FALSIFIED',
    'EXIT_USAGE',
    'EXIT_RESOURCE',
]
