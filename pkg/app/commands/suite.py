# app/commands/suite.py
import click

from services.reports import Report, SuiteRow
from services.suites import SUITE_NAMES, SuiteService

from .common import describe_report


def _row_line(row: SuiteRow, timings: bool) -> str:
    status = 'ok' if row.passed else 'FAIL'
    if row.expected_to_fail:
        status += ' (expected to fail)' if row.passed else ' (unexpectedly verified)'
    line = f"{status:<28} {row.instances:>8} {row.failures:>8}  {row.claim}"
    if timings and row.seconds is not None:
        line += f"  [{row.seconds:.3f}s]"
    return line


@click.command('suite')
@click.argument('name', type=click.Choice(SUITE_NAMES))
@click.option('--timings', is_flag=True, help='Show wall times per row and in the footer.')
@click.option('--verbose', is_flag=True, help='Print the failures of rows that did not pass.')
def suite(name, timings, verbose):
    """Run a group of acceptance checks and print a summary table"""
    click.echo(f"{'status':<28} {'instances':>8} {'failures':>8}  claim")

    def on_row(row: SuiteRow, report: Report) -> None:
        click.echo(_row_line(row, timings))
        if verbose and not row.passed:
            click.echo(describe_report(report))

    rows = SuiteService().run(name, on_row)
    failed = sum(not row.passed for row in rows)
    footer = f"{len(rows)} claims, {sum(r.instances for r in rows)} instances, {failed} failed"
    if timings:
        footer += f", {sum(r.seconds or 0 for r in rows):.1f}s"
    click.echo(footer)
    return 1 if failed else 0
