# app/middleware/exit_codes.py
import logging

import click

from services.errors import ConsistencyError, DomainError, FormedFlagsError, ResourceBoundError

from .base import CallNext, CommandMiddleware

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class ExitCodeMiddleware(CommandMiddleware):
    """
    Maps the outcome of a command to the process exit code:
    0 verified, 1 falsified or inconsistent, 2 bad parameters, 3 resource bound exceeded.
    Commands return an int to report a falsified claim without raising.
    """

    def dispatch(self, ctx: click.Context, call_next: CallNext):
        try:
            result = call_next(ctx)
        except click.ClickException:
            raise
        except ResourceBoundError as e:
            code = self._fail(e, EXIT_RESOURCE)
        except DomainError as e:
            code = self._fail(e, EXIT_USAGE)
        except ConsistencyError as e:
            code = self._fail(e, EXIT_FALSIFIED)
        except FormedFlagsError as e:
            code = self._fail(e, EXIT_FALSIFIED)
        except ValueError as e:
            # invalid settings overrides
            code = self._fail(e, EXIT_USAGE)
        else:
            code = result if isinstance(result, int) else EXIT_OK
        if code != EXIT_OK:
            ctx.exit(code)
        return result

    @staticmethod
    def _fail(error: Exception, code: int) -> int:
        logger.error(f"Error in command: {str(error)}")
        click.echo(f"Error: {error}", err=True)
        return code
