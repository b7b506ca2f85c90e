# app/commands/verify.py
import click

from services.counting import (
    CountingService,
    FormedSpaceSpec,
    verify_conjecture_C,
    verify_cross_paths,
    verify_prop2,
    verify_theorem2,
    verify_theorem_A,
    verify_theorem_B,
)
from services.counting.verification import theorem_B_specs

from .common import build_spec, emit_reports, epsilons_for, spec_options

format_option = click.option('--format', 'fmt', type=click.Choice(('text', 'json')), default='text', show_default=True)


@click.group('verify')
def verify():
    """Check a functional equation, identity or conjecture; exit 1 when falsified"""


@verify.command('theorem-a')
@spec_options
@click.option('--method', type=click.Choice(('closed', 'coxeter', 'recursive')), default='closed', show_default=True)
@format_option
def theorem_a(kind, n, epsilon, forms_type, method, fmt):
    """Functional equation of a formed space without a flag of forms"""
    spec = build_spec(kind, n, epsilon, forms_type)
    return emit_reports([verify_theorem_A(spec, method=method)], fmt)


@verify.command('theorem-b')
@spec_options
@click.option('--every-type', is_flag=True, help='Every admissible forms type I instead of --forms-type.')
@format_option
def theorem_b(kind, n, epsilon, forms_type, every_type, fmt):
    """Functional equation of a flag of forms against the dual type"""
    counting = CountingService()
    specs = theorem_B_specs(kind, n) if every_type else [build_spec(kind, n, epsilon, forms_type)]
    return emit_reports([verify_theorem_B(spec, counting) for spec in specs], fmt)


@verify.command('theorem2')
@click.option('--n', 'n', type=int, required=True)
@click.option('--epsilon', type=int, default=None)
@format_option
def theorem2(n, epsilon, fmt):
    """Orthogonal functional equation assembled from lifted alphas and fiber sums"""
    counting = CountingService()
    return emit_reports([verify_theorem2(n, e, counting) for e in epsilons_for(n, epsilon)], fmt)


@verify.command('prop2')
@click.option('--m', 'm', type=int, required=True)
@click.option('--parity', type=click.Choice(('odd', 'even')), required=True)
@click.option('--epsilon', type=int, default=None)
@format_option
def prop2(m, parity, epsilon, fmt):
    """Inversion equations of the bisected orthogonal alphas"""
    counting = CountingService()
    epsilons = [None] if parity == 'odd' else ([epsilon] if epsilon is not None else [1, -1])
    return emit_reports([verify_prop2(m, parity, e, counting) for e in epsilons], fmt)


@verify.command('conjecture-c')
@click.option('--n', 'n', type=int, required=True)
@click.option('--epsilon', type=int, default=None)
@format_option
def conjecture_c(n, epsilon, fmt):
    """Chessboard sums against the orthogonal alphas; both signs for even n unless one is given"""
    counting = CountingService()
    return emit_reports([verify_conjecture_C(n, e, counting) for e in epsilons_for(n, epsilon)], fmt)


@verify.command('cross-paths')
@spec_options
@format_option
def cross_paths(kind, n, epsilon, forms_type, fmt):
    """Every computation path of the alphas against the others"""
    spec: FormedSpaceSpec = build_spec(kind, n, epsilon, forms_type)
    return emit_reports([verify_cross_paths(spec)], fmt)
