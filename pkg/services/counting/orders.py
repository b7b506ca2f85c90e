"""Orders of the finite classical groups as polynomials in q."""
import logging
from math import comb
from typing import Optional

from ..errors import DomainError
from ..exactalg.laurent import LaurentPoly, poly_product

logger = logging.getLogger(__name__)

GROUP_KINDS = ('symplectic', 'unitary', 'orthogonal_odd', 'orthogonal_even')


def _q(exponent: int, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(exponent, coefficient, 'q')


def _validate_epsilon(epsilon: Optional[int]) -> int:
    if epsilon not in (1, -1):
        raise DomainError(f"epsilon must be +1 or -1, got {epsilon}")
    return epsilon


def symplectic_order(n: int) -> LaurentPoly:
    """q^binom(n+1, 2) prod_{i <= n/2} (1 - q^-2i)"""
    if n < 0 or n % 2:
        raise DomainError(f"Symplectic spaces have even dimension, got {n}")
    return poly_product((1 - _q(-2 * i) for i in range(1, n // 2 + 1)), 'q').shift(comb(n + 1, 2))


def unitary_order(n: int) -> LaurentPoly:
    """q^(n^2) prod_{i <= n} (1 - (-1/q)^i)"""
    if n < 0:
        raise DomainError(f"Dimension must be nonnegative, got {n}")
    return poly_product((1 - _q(-i, (-1) ** i) for i in range(1, n + 1)), 'q').shift(n * n)


def _even_powers_minus_one(m: int) -> LaurentPoly:
    return poly_product((_q(2 * i) - 1 for i in range(1, m + 1)), 'q')


def p_orthogonal(n: int, epsilon: Optional[int] = None) -> LaurentPoly:
    """p_{2m+1} = |O_{2m+1}(F_q)| and p_{2m,eps} = |O^eps_{2m}(F_q)| in odd characteristic"""
    if n < 1:
        raise DomainError(f"Orthogonal group orders need n >= 1, got {n}")
    m = n // 2
    if n % 2:
        return _even_powers_minus_one(m).shift(m * m) * 2
    epsilon = _validate_epsilon(epsilon)
    return (_q(m) - epsilon) * _even_powers_minus_one(m - 1).shift(m * m - m) * 2


def p_sharp(n: int, epsilon: Optional[int] = None) -> LaurentPoly:
    """p_n for odd n, (q^m + eps) p_{2m,eps} for even n; the latter does not depend on eps"""
    if n % 2:
        return p_orthogonal(n)
    epsilon = 1 if epsilon is None else _validate_epsilon(epsilon)
    return (_q(n // 2) + epsilon) * p_orthogonal(n, epsilon)


def group_order(kind: str, n: int, epsilon: Optional[int] = None) -> LaurentPoly:
    if kind == 'symplectic':
        return symplectic_order(n)
    if kind == 'unitary':
        return unitary_order(n)
    if kind == 'orthogonal_odd':
        if n % 2 == 0:
            raise DomainError(f"orthogonal_odd needs odd n, got {n}")
        return p_orthogonal(n)
    if kind == 'orthogonal_even':
        if n % 2:
            raise DomainError(f"orthogonal_even needs even n, got {n}")
        return p_orthogonal(n, epsilon)
    raise DomainError(f"Unknown group kind {kind}. Supported kinds: {', '.join(GROUP_KINDS)}")


def group_order_char2_orthogonal(n: int, epsilon: Optional[int] = None) -> LaurentPoly:
    """In characteristic 2 the odd orthogonal group has half the order p_{2m+1}"""
    if n % 2:
        return p_orthogonal(n).scale_exact(2)
    return p_orthogonal(n, epsilon)
