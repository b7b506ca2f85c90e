# app/commands/common.py
import json
import logging
from typing import Any, Callable, FrozenSet, Iterable, List, Optional

import click

from services.counting import FormedSpaceSpec
from services.counting.spaces import KINDS
from services.reports import Report
from services.schemas import validate_json

logger = logging.getLogger(__name__)

FORMATS = ('text', 'latex', 'json')


class SubsetParam(click.ParamType):
    """A comma list such as 2,4; an empty string or 'none' is the empty set"""

    name = 'subset'

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> FrozenSet[int]:
        if isinstance(value, frozenset):
            return value
        text = str(value).strip()
        if text in ('', 'none', '{}'):
            return frozenset()
        try:
            return frozenset(int(part) for part in text.strip('{}').split(','))
        except ValueError:
            self.fail(f"{value!r} is not a comma list of integers", param, ctx)


SUBSET = SubsetParam()


def spec_options(func: Callable) -> Callable:
    """--kind, --n, --epsilon and --forms-type"""
    func = click.option('--forms-type', type=SUBSET, default='', help='Flag-of-forms type I as a comma list.')(func)
    func = click.option('--epsilon', type=int, default=None, help='Sign of an even-dimensional orthogonal space.')(func)
    func = click.option('--n', 'n', type=int, required=True, help='Dimension of the space.')(func)
    func = click.option('--kind', type=click.Choice(KINDS), required=True)(func)
    return func


def build_spec(kind: str, n: int, epsilon: Optional[int], forms_type: Iterable[int]) -> FormedSpaceSpec:
    return FormedSpaceSpec(kind, n, epsilon, frozenset(forms_type))


def epsilons_for(n: int, epsilon: Optional[int]) -> List[Optional[int]]:
    """Both signs for even n when none is given"""
    if epsilon is not None:
        return [epsilon]
    return [1, -1] if n % 2 == 0 else [None]


def render_subset(J: Iterable[int], latex: bool = False) -> str:
    J = sorted(J)
    if not J:
        return '\\emptyset' if latex else '∅'
    body = ','.join(str(j) for j in J)
    return f"\\{{{body}\\}}" if latex else f"{{{body}}}"


def emit_json(kind: str, data: Any) -> None:
    validate_json(kind, data)
    click.echo(json.dumps(data, sort_keys=True, indent=2))


def emit_reports(reports: List[Report], fmt: str) -> int:
    """Print the reports; 1 when any of them was falsified"""
    if fmt == 'json':
        data = [report.to_json() for report in reports]
        for entry in data:
            validate_json('report', entry)
        click.echo(json.dumps(data, sort_keys=True, indent=2))
    else:
        for report in reports:
            click.echo(describe_report(report))
    return 0 if all(report.verified for report in reports) else 1


def describe_report(report: Report, max_failures: int = 5) -> str:
    status = 'verified' if report.verified else 'FALSIFIED'
    lines = [f"{report.claim}: {status} (instances {report.instances_checked}, vacuous {report.vacuous}, failures {len(report.failures)})"]
    for failure in report.failures[:max_failures]:
        lines.append(f"  J={render_subset(failure.J)} {json.dumps(failure.context, sort_keys=True, default=str)}")
    if len(report.failures) > max_failures:
        lines.append(f"  ... {len(report.failures) - max_failures} more")
    for key in sorted(report.details):
        lines.append(f"  {key}: {json.dumps(report.details[key], sort_keys=True, default=str)}")
    return '\n'.join(lines)
