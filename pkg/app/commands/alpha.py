# app/commands/alpha.py
import logging
from typing import FrozenSet, List, Optional, Tuple

import click

from services.counting import CountingService, FormedSpaceSpec
from services.errors import ConsistencyError
from services.oracle import OracleService

from .common import FORMATS, SUBSET, build_spec, emit_json, render_subset, spec_options

logger = logging.getLogger(__name__)

ALPHA_METHODS = ('closed', 'coxeter', 'recursive', 'oracle', 'cross')


def select_flag_types(spec: FormedSpaceSpec, sweep_all: bool, flag_types: Tuple[FrozenSet[int], ...]) -> List[FrozenSet[int]]:
    if sweep_all and flag_types:
        raise click.UsageError("Pass either --all or --flag-type, not both")
    if not sweep_all and not flag_types:
        raise click.UsageError("Pass --all or at least one --flag-type")
    if sweep_all:
        return spec.flag_types()
    return [spec.validate_flag_type(J) for J in flag_types]


def _oracle_rows(spec: FormedSpaceSpec, field: Optional[int], flag_types: List[FrozenSet[int]]) -> List[dict]:
    if field is None:
        raise click.UsageError("--method oracle needs --field")
    counts = OracleService().oracle_table(spec, field, flag_types)
    return [{'J': sorted(J), 'count': counts[J]} for J in flag_types]


def _formula_rows(spec: FormedSpaceSpec, method: str, field: Optional[int], flag_types: List[FrozenSet[int]]) -> List[dict]:
    counting = CountingService()
    rows = []
    for J in flag_types:
        rows.append({'J': sorted(J), 'a': counting.a_recursive(spec, J), 'alpha': counting.alpha(spec, J, method)})
    if method == 'cross' and field is not None:
        report = OracleService(counting=counting).cross_validate(spec, field, flag_types)
        if not report.verified:
            raise ConsistencyError(f"Oracle counts over F_{field} disagree with the formulas for {spec}: {len(report.failures)} failures")
    return rows


def _render_table(spec: FormedSpaceSpec, method: str, rows: List[dict], fmt: str) -> None:
    counts = 'count' in rows[0] if rows else False
    if fmt == 'json':
        encoded = []
        for row in rows:
            entry = {'J': row['J']}
            if counts:
                entry['count'] = row['count']
            else:
                entry['a'] = row['a'].to_json()
                entry['alpha'] = row['alpha'].to_json()
            encoded.append(entry)
        emit_json('alpha_table', {'spec': str(spec), 'method': method, 'rows': encoded})
        return
    if fmt == 'latex':
        click.echo('\\begin{tabular}{lll}' if not counts else '\\begin{tabular}{ll}')
        click.echo('$J$ & $a^J$ \\\\' if counts else '$J$ & $a^J(q)$ & $\\alpha^J(q^{-1})$ \\\\')
        for row in rows:
            J = render_subset(row['J'], latex=True)
            if counts:
                click.echo(f"${J}$ & ${row['count']}$ \\\\")
            else:
                click.echo(f"${J}$ & ${row['a'].render('latex')}$ & ${row['alpha'].render('latex')}$ \\\\")
        click.echo('\\end{tabular}')
        return
    click.echo(f"# {spec} method={method}")
    for row in rows:
        J = render_subset(row['J'])
        if counts:
            click.echo(f"{J}\t{row['count']}")
        else:
            click.echo(f"{J}\ta = {row['a'].render()}\tα = {row['alpha'].render()}")


@click.command('alpha')
@spec_options
@click.option('--method', type=click.Choice(ALPHA_METHODS), default='closed', show_default=True)
@click.option('--field', type=int, default=None, help='Field order for --method oracle or the oracle leg of --method cross.')
@click.option('--all', 'sweep_all', is_flag=True, help='Every flag type (the even ones for symplectic spaces).')
@click.option('--flag-type', 'flag_types', type=SUBSET, multiple=True, help='A flag type J as a comma list; repeatable.')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='text', show_default=True)
def alpha(kind, n, epsilon, forms_type, method, field, sweep_all, flag_types, fmt):
    """Tables of the flag counts a^J and their normalizations alpha^J"""
    spec = build_spec(kind, n, epsilon, forms_type)
    selected = select_flag_types(spec, sweep_all, flag_types)
    logger.info(f"alpha {spec} method={method} flag types={len(selected)}")
    if method == 'oracle':
        rows = _oracle_rows(spec, field, selected)
    else:
        rows = _formula_rows(spec, method, field, selected)
    _render_table(spec, method, rows, fmt)
