"""Named groups of checks with a summary row per claim."""
import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

from .base_service import BaseService
from .compositions.verification import (
    verify_bisect_properties,
    verify_composition_bijection,
    verify_eq20,
    verify_refinements_induced,
)
from .counting.service import CountingService
from .counting.spaces import FormedSpaceSpec
from .counting.verification import (
    theorem_A_specs,
    theorem_B_specs,
    verify_conjecture_C,
    verify_cross_paths,
    verify_fiber_constancy,
    verify_prop2,
    verify_theorem2,
    verify_theorem_A,
    verify_theorem_B,
    verify_typed_counts,
)
from .coxeter.verification import (
    verify_chessboard_kernel,
    verify_chessboard_subgroup,
    verify_descent_complement,
    verify_L_statistic,
    verify_lemma1,
    verify_lemma2,
    verify_length_duality,
    verify_theorem1,
)
from .errors import DomainError
from .exactalg.identities import verify_gkp, verify_identity_i, verify_identity_ii, verify_lemma3
from .exactalg.laurent import LaurentPoly
from .oracle.service import OracleService
from .oracle.verification import ORACLE_MATRIX, a3_negative_control, verify_a3_table
from .reports import Failure, Report, SuiteRow

logger = logging.getLogger(__name__)

Check = Tuple[Callable[[], Report], bool]
SUITE_NAMES = ('golden', 'lemmas', 'theorems', 'oracle-cross', 'conjecture', 'all')


def _poly(terms: Dict[int, int]) -> LaurentPoly:
    return LaurentPoly(terms, 'q')


def _geometric(top: int, step: int) -> Dict[int, int]:
    return {e: 1 for e in range(0, top + 1, step)}


_a_q2 = _poly({2: 1})
_pair_plus, _pair_minus = _poly({5: 1, 3: -1}), _poly({5: 1, 3: 1})

# spec -> {J: (a, alpha)}
GOLDEN_TABLES: List[Tuple[FormedSpaceSpec, Dict[frozenset, Tuple[LaurentPoly, LaurentPoly]]]] = [
    (FormedSpaceSpec('symplectic', 6, None, frozenset({4})), {
        frozenset(): (_poly({0: 1}), _poly({0: 1})),
        frozenset({2}): (_poly({8: 1, 4: 1, 2: 1}), _poly({0: 1, -4: 1, -6: 1})),
        frozenset({4}): (_poly({8: 1, 6: 1, 0: 1}), _poly({0: 1, -2: 1, -8: 1})),
        frozenset({2, 4}): (_poly({e + 2: 1 for e in _geometric(10, 2)}), _poly({-e: 1 for e in _geometric(10, 2)})),
    }),
    (FormedSpaceSpec('orthogonal', 3), {
        frozenset(): (_poly({0: 1}), _poly({0: 1})),
        frozenset({1}): (_a_q2, _poly({0: 1})),
        frozenset({2}): (_a_q2, _poly({0: 1})),
        frozenset({1, 2}): (_poly({3: 1, 1: -1}), _poly({0: 1, -2: -1})),
    }),
    (FormedSpaceSpec('orthogonal', 4, 1), {
        frozenset(): (_poly({0: 1}), _poly({0: 1})),
        frozenset({1}): (_poly({3: 1, 1: -1}), _poly({0: 1, -2: -1})),
        frozenset({3}): (_poly({3: 1, 1: -1}), _poly({0: 1, -2: -1})),
        frozenset({2}): (_poly({4: 1, 2: 1}), _poly({0: 1, -2: 1})),
        frozenset({1, 2}): (_pair_plus, _poly({0: 1, -2: -1})),
        frozenset({2, 3}): (_pair_plus, _poly({0: 1, -2: -1})),
        frozenset({1, 3}): (_pair_plus, _poly({0: 1, -2: -1})),
        frozenset({1, 2, 3}): (_poly({6: 1, 4: -2, 2: 1}), _poly({0: 1, -2: -2, -4: 1})),
    }),
    (FormedSpaceSpec('orthogonal', 4, -1), {
        frozenset(): (_poly({0: 1}), _poly({0: 1})),
        frozenset({1}): (_poly({3: 1, 1: 1}), _poly({0: 1, -2: 1})),
        frozenset({3}): (_poly({3: 1, 1: 1}), _poly({0: 1, -2: 1})),
        frozenset({2}): (_poly({4: 1, 2: 1}), _poly({0: 1, -2: 1})),
        frozenset({1, 2}): (_pair_minus, _poly({0: 1, -2: 1})),
        frozenset({2, 3}): (_pair_minus, _poly({0: 1, -2: 1})),
        frozenset({1, 3}): (_pair_minus, _poly({0: 1, -2: 1})),
        frozenset({1, 2, 3}): (_poly({6: 1, 2: -1}), _poly({0: 1, -4: -1})),
    }),
]

# Canonical render: one term per X-monomial, by degree then index, never grouped
# under a common q-power as in 1 + q⁻²(...) + q⁻⁴X₁X₂X₃
GOLDEN_DISPLAYS: List[Tuple[FormedSpaceSpec, str]] = [
    (FormedSpaceSpec('symplectic', 6, None, frozenset({4})), "(1 + (q⁻⁴+q⁻⁶)X₁ + (q⁻²+q⁻⁸)X₂ + q⁻¹⁰X₁X₂)/((1−X₁)(1−X₂))"),
    (FormedSpaceSpec('orthogonal', 3), "(1 − q⁻²X₁X₂)/((1−X₁)(1−X₂))"),
    (FormedSpaceSpec('orthogonal', 4, 1), "(1 − q⁻²X₁ + q⁻²X₂ − q⁻²X₃ − q⁻²X₁X₂ + q⁻²X₁X₃ − q⁻²X₂X₃ + q⁻⁴X₁X₂X₃)/((1−X₁)(1−X₂)(1−X₃))"),
    (FormedSpaceSpec('orthogonal', 4, -1), "(1 + q⁻²X₁ + q⁻²X₂ + q⁻²X₃ − q⁻²X₁X₂ − q⁻²X₁X₃ − q⁻²X₂X₃ − q⁻⁴X₁X₂X₃)/((1−X₁)(1−X₂)(1−X₃))"),
]


class SuiteService(BaseService):
    service_name = 'suites'

    def __init__(self, settings=None):
        super().__init__(settings)
        self.counting = CountingService(self.settings)
        self.oracle = OracleService(self.settings, self.counting)

    # golden

    def golden_table(self, spec: FormedSpaceSpec, expected: Dict[frozenset, Tuple[LaurentPoly, LaurentPoly]]) -> Report:
        report = Report(claim=f"golden table {spec}")
        methods = ('closed', 'recursive') if spec.kind == 'orthogonal' else ('closed', 'recursive', 'coxeter')
        for J, (a, alpha) in expected.items():
            report.compare(J, self.counting.a_recursive(spec, J), a, value='a')
            for method in methods:
                report.compare(J, self.counting.alpha(spec, J, method), alpha, value='alpha', method=method)
        return report

    def golden_display(self, spec: FormedSpaceSpec, expected: str) -> Report:
        report = Report(claim=f"golden display {spec}")
        rendered = self.counting.igusa_function(spec).render('text')
        report.check(rendered == expected, Failure(context={'rendered': rendered, 'expected': expected}))
        return report

    def golden_checks(self) -> List[Check]:
        checks: List[Check] = [(lambda s=s, t=t: self.golden_table(s, t), False) for s, t in GOLDEN_TABLES]
        checks += [(lambda s=s, d=d: self.golden_display(s, d), False) for s, d in GOLDEN_DISPLAYS]
        checks.append((lambda: verify_theorem_B(GOLDEN_TABLES[0][0], self.counting), False))
        return checks

    # lemmas and properties

    def lemma_checks(self) -> List[Check]:
        checks: List[Check] = []
        checks += [(lambda n=n: verify_lemma2(n), False) for n in range(1, 7)]
        checks += [(lambda n=n: verify_lemma1(n), False) for n in range(1, 6)]
        checks += [(lambda n=n: verify_descent_complement(n), False) for n in range(1, 7)]
        checks += [(lambda n=n: verify_length_duality(n), False) for n in range(1, 7)]
        checks += [(lambda n=n: verify_L_statistic(n), False) for n in range(1, 8)]
        checks += [(lambda n=n: verify_chessboard_subgroup(n), False) for n in range(1, 7)]
        checks += [(lambda n=n: verify_chessboard_kernel(n), False) for n in range(2, 8)]
        checks += [(lambda n=n: verify_theorem1(n), False) for n in range(2, 7)]
        checks.append((lambda: verify_lemma3(6), False))
        checks += [(lambda n=n: verify_composition_bijection(n), False) for n in range(1, 10)]
        checks += [(lambda n=n: verify_bisect_properties(n), False) for n in range(1, 10)]
        checks += [(lambda n=n: verify_refinements_induced(n), False) for n in range(2, 9)]
        checks += [(lambda n=n: verify_eq20(n), False) for n in range(2, 10)]
        for m in range(1, 6):
            checks.append((lambda m=m: verify_prop2(m, 'odd', None, self.counting, max_eq20_n=0), False))
            for epsilon in (1, -1):
                checks.append((lambda m=m, e=epsilon: verify_prop2(m, 'even', e, self.counting, max_eq20_n=0), False))
        checks.append((lambda: verify_identity_i(10), False))
        checks.append((lambda: verify_identity_ii(8), False))
        checks.append((lambda: verify_gkp(12), False))
        for n in range(2, 11):
            for epsilon in ((1, -1) if n % 2 == 0 else (None,)):
                spec = FormedSpaceSpec('orthogonal', n, epsilon)
                checks.append((lambda s=spec: verify_cross_paths(s, self.counting), False))
                checks.append((lambda n=n, e=epsilon: verify_fiber_constancy(n, e), False))
                if n <= 8:
                    checks.append((lambda n=n, e=epsilon: verify_typed_counts(n, e), False))
        return checks

    # functional equations

    def theorem_checks(self) -> List[Check]:
        checks: List[Check] = []
        specs = theorem_A_specs('symplectic', (2, 4, 6, 8))
        specs += theorem_A_specs('unitary', range(2, 8))
        specs += theorem_A_specs('orthogonal', range(2, 14))
        checks += [(lambda s=s: verify_theorem_A(s, self.counting), False) for s in specs]
        b_specs = theorem_B_specs('symplectic', 4) + theorem_B_specs('symplectic', 6)
        for n in range(2, 6):
            b_specs += theorem_B_specs('unitary', n)
        for spec in b_specs:
            checks.append((lambda s=spec: verify_theorem_B(s, self.counting), False))
            checks.append((lambda s=spec: verify_cross_paths(s, self.counting), False))
        for n in range(2, 11):
            for epsilon in ((1, -1) if n % 2 == 0 else (None,)):
                checks.append((lambda n=n, e=epsilon: verify_theorem2(n, e, self.counting), False))
        return checks

    # oracle

    def oracle_checks(self) -> List[Check]:
        checks: List[Check] = []
        for spec, orders, flag_types in ORACLE_MATRIX:
            checks += [(lambda s=spec, o=order, f=flag_types: self.oracle.cross_validate(s, o, f), False) for order in orders]
        for n, epsilon in ((2, 1), (2, -1), (3, None), (4, 1), (4, -1)):
            checks.append((lambda n=n, e=epsilon: self.oracle.characteristic_independence(n, e), False))
        for n, epsilon in ((3, None), (4, 1), (4, -1)):
            checks.append((lambda n=n, e=epsilon: self.oracle.typed_cross_validate(n, e, 3), False))
        checks.append((lambda: self.oracle.isometry_invariance(FormedSpaceSpec('orthogonal', 3), 3), False))
        checks.append((lambda: self.oracle.isometry_invariance(FormedSpaceSpec('symplectic', 4), 2), False))
        checks.append((self.oracle.group_orders, False))
        checks.append((lambda: verify_a3_table(self.oracle), False))
        checks += [(lambda r=r: r, True) for r in a3_negative_control()]
        return checks

    def conjecture_checks(self) -> List[Check]:
        checks: List[Check] = []
        for n in range(2, 14):
            for epsilon in ((1, -1) if n % 2 == 0 else (None,)):
                checks.append((lambda n=n, e=epsilon: verify_conjecture_C(n, e, self.counting), False))
        return checks

    def checks(self, name: str) -> List[Check]:
        groups = {
            'golden': self.golden_checks,
            'lemmas': self.lemma_checks,
            'theorems': self.theorem_checks,
            'oracle-cross': self.oracle_checks,
            'conjecture': self.conjecture_checks,
        }
        if name == 'all':
            return [check for group in groups.values() for check in group()]
        if name not in groups:
            raise DomainError(f"Unknown suite {name}. Supported suites: {', '.join(SUITE_NAMES)}")
        return groups[name]()

    def run(self, name: str, on_row: Optional[Callable[[SuiteRow, Report], None]] = None) -> List[SuiteRow]:
        """Run every check of the suite; a row passes when its outcome matches the expectation"""
        self.log_run('suite', 'started', {'name': name})
        rows: List[SuiteRow] = []
        for check, expected_to_fail in self.checks(name):
            start = time.perf_counter()
            report = check()
            row = SuiteRow.from_report(report, round(time.perf_counter() - start, 3), expected_to_fail)
            rows.append(row)
            if on_row:
                on_row(row, report)
        self.log_run('suite', 'finished', {'name': name, 'rows': len(rows), 'failed': sum(not r.passed for r in rows)})
        return rows
