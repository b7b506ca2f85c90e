# app/commands/explore.py
import click

from services.counting import explore_full_sum
from services.coxeter.verification import m_set as m_set_report

from .common import emit_reports

format_option = click.option('--format', 'fmt', type=click.Choice(('text', 'json')), default='text', show_default=True)


@click.group('explore')
def explore():
    """Open questions: results are reported, never asserted"""


@explore.command('m-set')
@click.option('--n', 'n', type=int, required=True)
@format_option
def m_set(n, fmt):
    """Elements distinguished from every w s by descent set or L-statistic"""
    return emit_reports([m_set_report(n)], fmt)


@explore.command('full-sum')
@click.option('--n', 'n', type=int, required=True)
@click.option('--epsilon', type=int, default=None)
@format_option
def full_sum(n, epsilon, fmt):
    """Signed L-sums over the whole symmetric group against the orthogonal alphas"""
    return emit_reports([explore_full_sum(n, epsilon)], fmt)
