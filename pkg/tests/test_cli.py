import json

import pytest
from click.testing import CliRunner

from app.app import cli, run
from services.counting import CountingService
from services.errors import ConsistencyError
from services.reports import Report
from services.schemas import validate_json

SP6 = ['--kind', 'symplectic', '--n', '6', '--forms-type', '4']


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


class TestAlpha:
    def test_text_table(self, runner):
        result = invoke(runner, 'alpha', *SP6, '--all')
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == '# symplectic n=6 I=[4] method=closed'
        assert '{2}\ta = q⁸ + q⁴ + q²\tα = 1 + q⁻⁴ + q⁻⁶' in lines
        assert '{4}\ta = q⁸ + q⁶ + 1\tα = 1 + q⁻² + q⁻⁸' in lines
        assert len(lines) == 5

    def test_json_table(self, runner):
        result = invoke(runner, 'alpha', '--kind', 'orthogonal', '--n', '3', '--all', '--method', 'recursive', '--format', 'json')
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        validate_json('alpha_table', data)
        assert data['method'] == 'recursive'
        rows = {tuple(row['J']): row for row in data['rows']}
        assert rows[(1, 2)]['a'] == {'var': 'q', 'terms': [[1, '-1'], [3, '1']]}

    def test_latex_table(self, runner):
        result = invoke(runner, 'alpha', '--kind', 'unitary', '--n', '2', '--flag-type', '1', '--format', 'latex')
        assert result.exit_code == 0
        assert '$\\{1\\}$ & $q^{2} - q$ & $1 - q^{-1}$ \\\\' in result.stdout

    def test_oracle_method(self, runner):
        result = invoke(runner, 'alpha', '--kind', 'orthogonal', '--n', '3', '--flag-type', '1', '--method', 'oracle', '--field', '2')
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == '{1}\t4'

    def test_cross_with_oracle(self, runner):
        result = invoke(runner, 'alpha', '--kind', 'orthogonal', '--n', '3', '--all', '--method', 'cross', '--field', '3')
        assert result.exit_code == 0

    def test_needs_flag_types(self, runner):
        assert invoke(runner, 'alpha', *SP6).exit_code == 2

    def test_oracle_needs_field(self, runner):
        assert invoke(runner, 'alpha', *SP6, '--all', '--method', 'oracle').exit_code == 2

    def test_domain_error(self, runner):
        result = invoke(runner, 'alpha', '--kind', 'symplectic', '--n', '5', '--all')
        assert result.exit_code == 2
        assert 'Error: Symplectic spaces have even dimension' in result.stderr

    def test_bad_subset(self, runner):
        assert invoke(runner, 'alpha', *SP6, '--flag-type', 'two').exit_code == 2

    def test_resource_bound(self, runner):
        result = runner.invoke(cli, ['--max-group-size', '1', 'alpha', *SP6, '--all', '--method', 'coxeter'])
        assert result.exit_code == 3
        assert 'group_size exceeded' in result.stderr

    def test_invalid_settings_override(self, runner):
        assert runner.invoke(cli, ['--threads', '0', 'alpha', *SP6, '--all']).exit_code == 2

    def test_inconsistency(self, runner, monkeypatch):
        def disagree(self, spec, J, method='closed'):
            raise ConsistencyError('paths disagree')

        monkeypatch.setattr(CountingService, 'alpha', disagree)
        result = invoke(runner, 'alpha', *SP6, '--all')
        assert result.exit_code == 1
        assert 'paths disagree' in result.stderr


class TestIgusa:
    def test_text(self, runner):
        result = invoke(runner, 'igusa', '--kind', 'orthogonal', '--n', '3')
        assert result.exit_code == 0
        assert result.stdout.strip() == '(1 − q⁻²X₁X₂)/((1−X₁)(1−X₂))'

    def test_latex(self, runner):
        result = invoke(runner, 'igusa', '--kind', 'orthogonal', '--n', '3', '--format', 'latex')
        assert result.stdout.strip() == '\\frac{1 - q^{-2} X_{1} X_{2}}{(1 - X_{1})(1 - X_{2})}'

    def test_json(self, runner):
        result = invoke(runner, 'igusa', *SP6, '--format', 'json')
        data = json.loads(result.stdout)
        validate_json('igusa', data)
        assert data['n_vars'] == 2

    def test_check_equation(self, runner):
        result = invoke(runner, 'igusa', *SP6, '--check-equation')
        assert result.exit_code == 0
        assert 'functional equation: verified' in result.stderr

    def test_missing_epsilon(self, runner):
        assert invoke(runner, 'igusa', '--kind', 'orthogonal', '--n', '4').exit_code == 2


class TestVerify:
    @pytest.mark.parametrize('args', [
        ['theorem-a', '--kind', 'unitary', '--n', '3'],
        ['theorem-a', '--kind', 'orthogonal', '--n', '4', '--epsilon', '-1', '--method', 'recursive'],
        ['theorem-b', '--kind', 'symplectic', '--n', '6', '--every-type'],
        ['theorem2', '--n', '4'],
        ['prop2', '--m', '2', '--parity', 'odd'],
        ['conjecture-c', '--n', '4'],
        ['cross-paths', *SP6],
    ])
    def test_verified(self, runner, args):
        result = invoke(runner, 'verify', *args)
        assert result.exit_code == 0, result.stdout + result.stderr
        assert 'FALSIFIED' not in result.stdout

    def test_json_reports(self, runner):
        result = invoke(runner, 'verify', 'theorem2', '--n', '4', '--format', 'json')
        reports = json.loads(result.stdout)
        assert len(reports) == 2
        for report in reports:
            validate_json('report', report)
            assert report['verified']

    def test_falsified_claim_exits_one(self, runner, monkeypatch):
        monkeypatch.setattr('app.commands.verify.verify_theorem2', lambda n, e, service: Report(claim='forced', verified=False))
        result = invoke(runner, 'verify', 'theorem2', '--n', '3')
        assert result.exit_code == 1
        assert 'forced: FALSIFIED' in result.stdout


class TestOracle:
    def test_count(self, runner):
        result = invoke(runner, 'oracle', 'count', '--kind', 'symplectic', '--n', '4', '--field', '3', '--flag-type', '2')
        assert result.exit_code == 0
        assert result.stdout.strip() == '{2}\t90'

    def test_count_check(self, runner):
        result = invoke(runner, 'oracle', 'count', '--kind', 'orthogonal', '--n', '3', '--field', '2', '--all', '--check')
        assert result.exit_code == 0
        assert 'verified' in result.stdout

    def test_count_json(self, runner):
        result = invoke(runner, 'oracle', 'count', '--kind', 'unitary', '--n', '2', '--field', '4', '--all', '--format', 'json')
        data = json.loads(result.stdout)
        validate_json('alpha_table', data)
        assert [row['count'] for row in data['rows']] == [1, 2]

    def test_unsupported_field(self, runner):
        assert invoke(runner, 'oracle', 'count', '--kind', 'orthogonal', '--n', '3', '--field', '6', '--all').exit_code == 2

    def test_typed(self, runner):
        result = invoke(runner, 'oracle', 'typed', '--n', '4', '--epsilon', '1', '--field', '3', '--j', '2', '--delta', '-1')
        assert result.stdout.strip() == '18'

    def test_a3(self, runner):
        result = invoke(runner, 'oracle', 'a3')
        assert result.exit_code == 0
        assert '{1,2,3}\t48\tq⁶ − q⁴' in result.stdout.splitlines()


class TestExploreAndSuite:
    def test_m_set(self, runner):
        result = invoke(runner, 'explore', 'm-set', '--n', '4', '--format', 'json')
        assert result.exit_code == 0
        report = json.loads(result.stdout)[0]
        assert 'equal_to_chessboard' in report['details']

    def test_full_sum(self, runner):
        result = invoke(runner, 'explore', 'full-sum', '--n', '3')
        assert result.exit_code == 0
        assert 'all_equal' in result.stdout

    def test_golden_suite(self, runner):
        result = invoke(runner, 'suite', 'golden')
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1].endswith('0 failed')

    def test_unknown_suite(self, runner):
        assert invoke(runner, 'suite', 'bogus').exit_code == 2


def test_run_returns_exit_codes():
    assert run(['--help']) == 0
    assert run(['alpha', '--kind', 'symplectic', '--n', '5', '--all']) == 2
