from typing import Iterable, Optional

from ..exactalg.laurent import LaurentPoly
from .constants import FEConstants, fe_constants
from .orders import group_order, group_order_char2_orthogonal, p_orthogonal, p_sharp
from .orthogonal import a_orthogonal, a_orthogonal_typed, alpha_orthogonal_prop3
from .service import METHODS, AlphaTable, CountingService
from .spaces import FormedSpaceSpec
from .symplectic_unitary import a_recursive_sp_u, alpha_base_sp_u, normalize
from .verification import (
    coefficient_identities,
    explore_full_sum,
    verify_conjecture_C,
    verify_cross_paths,
    verify_fiber_constancy,
    verify_prop2,
    verify_theorem2,
    verify_theorem_A,
    verify_theorem_B,
    verify_typed_counts,
)


def alpha_coxeter(spec: FormedSpaceSpec, J: Iterable[int]) -> LaurentPoly:
    return CountingService().alpha_coxeter(spec, J)


def conjecture_alpha(n: int, epsilon: Optional[int], J: Iterable[int]) -> LaurentPoly:
    return CountingService().conjecture_alpha(n, epsilon, J)


def alpha_lifted(n: int, epsilon: Optional[int], G: Iterable[int], check_fiber: bool = False) -> LaurentPoly:
    return CountingService().alpha_lifted(n, epsilon, G, check_fiber)


def igusa_function(spec: FormedSpaceSpec, method: str = 'closed'):
    return CountingService().igusa_function(spec, method)


__all__ = [
    'AlphaTable',
    'CountingService',
    'FEConstants',
    'FormedSpaceSpec',
    'METHODS',
    'a_orthogonal',
    'a_orthogonal_typed',
    'a_recursive_sp_u',
    'alpha_base_sp_u',
    'alpha_coxeter',
    'alpha_lifted',
    'alpha_orthogonal_prop3',
    'coefficient_identities',
    'conjecture_alpha',
    'explore_full_sum',
    'fe_constants',
    'group_order',
    'group_order_char2_orthogonal',
    'igusa_function',
    'normalize',
    'p_orthogonal',
    'p_sharp',
    'verify_conjecture_C',
    'verify_cross_paths',
    'verify_fiber_constancy',
    'verify_prop2',
    'verify_theorem2',
    'verify_theorem_A',
    'verify_theorem_B',
    'verify_typed_counts',
]
