# app/commands/oracle.py
import click

from services.oracle import A3_POLYNOMIALS, OracleService, get_field, standard_space

from .alpha import select_flag_types
from .common import SUBSET, build_spec, emit_json, emit_reports, render_subset, spec_options


@click.group('oracle')
def oracle():
    """Brute-force enumeration over small finite fields"""


@oracle.command('count')
@spec_options
@click.option('--field', type=int, required=True, help='Field order: 2, 3, 4, 5, 7 or 9.')
@click.option('--all', 'sweep_all', is_flag=True)
@click.option('--flag-type', 'flag_types', type=SUBSET, multiple=True)
@click.option('--check', is_flag=True, help='Compare every count with the formula evaluated at q; exit 1 on a mismatch.')
@click.option('--format', 'fmt', type=click.Choice(('text', 'json')), default='text', show_default=True)
def count(kind, n, epsilon, forms_type, field, sweep_all, flag_types, check, fmt):
    """Enumerated numbers of non-degenerate flags"""
    spec = build_spec(kind, n, epsilon, forms_type)
    selected = select_flag_types(spec, sweep_all, flag_types)
    service = OracleService()
    if check:
        return emit_reports([service.cross_validate(spec, field, selected)], fmt)
    counts = service.oracle_table(spec, field, selected)
    if fmt == 'json':
        emit_json('alpha_table', {'spec': str(spec), 'method': 'oracle', 'rows': [{'J': sorted(J), 'count': counts[J]} for J in selected]})
        return
    for J in selected:
        click.echo(f"{render_subset(J)}\t{counts[J]}")


@oracle.command('typed')
@click.option('--n', 'n', type=int, required=True)
@click.option('--epsilon', type=int, default=None)
@click.option('--field', type=int, required=True)
@click.option('--j', 'j', type=int, required=True, help='Subspace dimension.')
@click.option('--delta', type=int, default=None, help='Type of an even-dimensional subspace.')
def typed(n, epsilon, field, j, delta):
    """Non-degenerate j-dimensional subspaces of an orthogonal space, by type"""
    service = OracleService()
    space = standard_space('orthogonal', n, get_field(field), epsilon)
    click.echo(service.count_typed_subspaces(space, j, delta))


@oracle.command('a3')
@click.option('--field', type=int, default=2, show_default=True)
def a3(field):
    """Characteristic-2 symmetric bilinear counts beside the polynomials they follow"""
    table = OracleService().a3_counterexample_table(field)
    for J, value in table.items():
        click.echo(f"{render_subset(J)}\t{value}\t{A3_POLYNOMIALS[J].render()}")


@oracle.command('group-orders')
@click.option('--format', 'fmt', type=click.Choice(('text', 'json')), default='text', show_default=True)
def group_orders(fmt):
    """Enumerated isometry group orders against the order polynomials"""
    return emit_reports([OracleService().group_orders()], fmt)
