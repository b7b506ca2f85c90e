import logging
import sys
from typing import List, Optional

import click

from app.commands import alpha, explore, igusa, oracle, suite, verify
from app.middleware import ExitCodeMiddleware, MiddlewareGroup, StderrLoggingMiddleware
from services.config import LOG_LEVELS, SettingsManager


@click.group(cls=MiddlewareGroup)
@click.option('--max-group-size', type=int, default=None, help='Bound on group elements per sweep.')
@click.option('--max-oracle-ops', type=int, default=None, help='Bound on elementary oracle steps.')
@click.option('--threads', type=int, default=None, help='Worker processes for splittable sweeps.')
@click.option('--log-level', type=click.Choice(sorted(LOG_LEVELS), case_sensitive=False), default=None)
@click.option('--progress/--no-progress', default=None, help='Progress bars on long sweeps.')
def cli(max_group_size, max_oracle_ops, threads, log_level, progress):
    """Flag counts of finite formed spaces and their Igusa functions"""
    settings = SettingsManager().override(
        max_group_size=max_group_size,
        max_oracle_ops=max_oracle_ops,
        threads=threads,
        log_level=log_level,
        progress=progress,
    )
    logging.getLogger().setLevel(settings.log_level)


# Exit codes first, then stderr logging around everything
cli.add_middleware(ExitCodeMiddleware)
cli.add_middleware(StderrLoggingMiddleware)

# Commands
cli.add_command(alpha.alpha)
cli.add_command(igusa.igusa)
cli.add_command(verify.verify)
cli.add_command(oracle.oracle)
cli.add_command(explore.explore)
cli.add_command(suite.suite)


def run(argv: Optional[List[str]] = None) -> int:
    """Invoke the CLI and return its exit code instead of exiting"""
    try:
        cli.main(args=argv, prog_name='formedflags', standalone_mode=True)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
