from .igusa import (
    IgusaFunction,
    igusa_from_F_coeffs,
    igusa_invert_base,
    igusa_invert_vars,
    igusa_render,
    subsets_of,
)
from .laurent import LaurentPoly, laurent_arith, poly_product, poly_sum
from .qbinomial import gaussian_binomial, gaussian_multinomial
from .ratfunc import RatFunc, ratfunc_arith, to_polynomial

__all__ = [
    'LaurentPoly',
    'RatFunc',
    'IgusaFunction',
    'laurent_arith',
    'poly_sum',
    'poly_product',
    'ratfunc_arith',
    'to_polynomial',
    'gaussian_binomial',
    'gaussian_multinomial',
    'igusa_from_F_coeffs',
    'igusa_invert_vars',
    'igusa_invert_base',
    'igusa_render',
    'subsets_of',
]
