import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..counting.constants import FEConstants
from ..counting.spaces import FormedSpaceSpec
from ..counting.symplectic_unitary import normalize
from ..counting.verification import coefficient_identities
from ..exactalg.laurent import LaurentPoly
from ..reports import Failure, Report
from .service import OracleService

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]

_q5 = LaurentPoly.monomial(5)
A3_POLYNOMIALS: Dict[Subset, LaurentPoly] = {
    frozenset(): LaurentPoly.one(),
    frozenset({1}): LaurentPoly.monomial(3),
    frozenset({3}): LaurentPoly.monomial(3),
    frozenset({2}): LaurentPoly({4: 1, 2: 1}),
    frozenset({1, 2}): _q5,
    frozenset({2, 3}): _q5,
    frozenset({1, 3}): _q5,
    frozenset({1, 2, 3}): LaurentPoly({6: 1, 4: -1}),
}

# the two orthogonal rows of the constant table at n = 4
A3_CONSTANT_CHOICES: Tuple[FEConstants, ...] = (FEConstants(3, 4), FEConstants(2, 4))

# (spec, field orders, flag types or None for all)
ORACLE_MATRIX: List[Tuple[FormedSpaceSpec, Tuple[int, ...], Optional[List[Subset]]]] = [
    (FormedSpaceSpec('symplectic', 4), (2, 3), None),
    (FormedSpaceSpec('symplectic', 6), (2,), None),
    (FormedSpaceSpec('orthogonal', 2, 1), (2, 3, 5), None),
    (FormedSpaceSpec('orthogonal', 2, -1), (2, 3, 5), None),
    (FormedSpaceSpec('orthogonal', 3), (2, 3, 5), None),
    (FormedSpaceSpec('orthogonal', 4, 1), (2, 3, 5), None),
    (FormedSpaceSpec('orthogonal', 4, -1), (2, 3, 5), None),
    (FormedSpaceSpec('unitary', 2), (4, 9), None),
    (FormedSpaceSpec('unitary', 3), (4,), None),
    (FormedSpaceSpec('symplectic', 4, None, frozenset({2})), (2, 3), None),
]


def verify_a3_table(service: Optional[OracleService] = None, order: int = 2) -> Report:
    service = service or OracleService()
    report = Report(claim=f"symmetric bilinear counterexample table q={order}")
    for J, count in service.a3_counterexample_table(order).items():
        expected = A3_POLYNOMIALS[J].evaluate_at(order)
        report.check(expected == count, Failure(J=sorted(J), context={'q': order, 'formula': int(expected), 'oracle': count}))
    return report


def a3_negative_control() -> List[Report]:
    """Coefficient identities for the counterexample table; each report is expected to fail"""
    alpha = {J: normalize(a) for J, a in A3_POLYNOMIALS.items()}
    return [
        coefficient_identities(alpha, alpha, constants, f"counterexample (a,b)=({constants.a},{constants.b})")
        for constants in A3_CONSTANT_CHOICES
    ]


def verify_oracle_matrix(service: Optional[OracleService] = None) -> List[Report]:
    service = service or OracleService()
    reports = []
    for spec, orders, flag_types in ORACLE_MATRIX:
        for order in orders:
            reports.append(service.cross_validate(spec, order, flag_types))
    return reports
