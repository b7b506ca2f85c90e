from .enumerate import count_flags, count_typed_subspaces, isometry_group_order, subspaces, witt_type
from .fields import SmallField, get_field
from .service import OracleService
from .spaces import FlagOfForms, GramSpace, standard_flag_of_forms, standard_space
from .verification import (
    A3_POLYNOMIALS,
    ORACLE_MATRIX,
    a3_negative_control,
    verify_a3_table,
    verify_oracle_matrix,
)


def a3_counterexample_table(field_order: int = 2):
    return OracleService().a3_counterexample_table(field_order)


def is_nondegenerate(target, subspace) -> bool:
    return target.is_nondegenerate(subspace)


__all__ = [
    'A3_POLYNOMIALS',
    'FlagOfForms',
    'GramSpace',
    'ORACLE_MATRIX',
    'OracleService',
    'SmallField',
    'a3_counterexample_table',
    'a3_negative_control',
    'count_flags',
    'count_typed_subspaces',
    'get_field',
    'is_nondegenerate',
    'isometry_group_order',
    'standard_flag_of_forms',
    'standard_space',
    'subspaces',
    'verify_a3_table',
    'verify_oracle_matrix',
    'witt_type',
]
