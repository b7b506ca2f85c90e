# app/commands/igusa.py
import json

import click

from services.counting import METHODS, CountingService, verify_theorem_A, verify_theorem_B
from services.schemas import validate_json

from .common import FORMATS, build_spec, spec_options


@click.command('igusa')
@spec_options
@click.option('--method', type=click.Choice(METHODS), default='closed', show_default=True)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='text', show_default=True)
@click.option('--check-equation', is_flag=True, help='Also verify the functional equation under X -> 1/X, q -> 1/q.')
def igusa(kind, n, epsilon, forms_type, method, fmt, check_equation):
    """The Igusa function sum_J alpha^J(1/q) F_J(X) of a standard space"""
    spec = build_spec(kind, n, epsilon, forms_type)
    function = CountingService().igusa_function(spec, method)
    if fmt == 'json':
        data = function.to_json()
        validate_json('igusa', data)
        click.echo(json.dumps(data, sort_keys=True, indent=2))
    else:
        click.echo(function.render(fmt))
    if check_equation:
        report = verify_theorem_B(spec, method=method) if spec.forms_type else verify_theorem_A(spec, method=method)
        click.echo(f"functional equation: {'verified' if report.verified else 'FALSIFIED'}", err=True)
        return 0 if report.verified else 1
