# app/middleware/logging_setup.py
import logging
import sys

import click

from services.config import get_settings

from .base import CallNext, CommandMiddleware

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class StderrLoggingMiddleware(CommandMiddleware):
    """Sends every log record to stderr so data output on stdout stays clean"""

    def dispatch(self, ctx: click.Context, call_next: CallNext):
        root = logging.getLogger()
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(get_settings().log_level)
        try:
            return call_next(ctx)
        finally:
            root.removeHandler(handler)
