from functools import lru_cache
from typing import Iterable

from ..errors import DomainError
from .laurent import LaurentPoly


@lru_cache(maxsize=None)
def _pascal(a: int, b: int, var: str) -> LaurentPoly:
    if b == 0 or b == a:
        return LaurentPoly.one(var)
    left = _pascal(a - 1, b - 1, var)
    right = _pascal(a - 1, b, var)
    return left.shift(a - b) + right


def gaussian_binomial(a: int, b: int, var: str = 'X') -> LaurentPoly:
    """Number of b-dimensional subspaces of an a-dimensional space over F_X"""
    if a < 0 or b < 0:
        raise DomainError(f"Gaussian binomial needs nonnegative arguments, got ({a}, {b})")
    if a < b:
        raise DomainError(f"Gaussian binomial needs a >= b, got ({a}, {b})")
    return _pascal(a, b, var)


def gaussian_multinomial(n: int, J: Iterable[int], var: str = 'X') -> LaurentPoly:
    """binom(n, j_s) binom(j_s, j_{s-1}) ... binom(j_2, j_1): flags of type J in F_X^n"""
    members = sorted(set(J))
    if members and (members[0] < 0 or members[-1] > n - 1):
        raise DomainError(f"Flag type {members} is not contained in [{n - 1}]_0")
    result = LaurentPoly.one(var)
    upper = n
    for j in reversed(members):
        result = result * gaussian_binomial(upper, j, var)
        upper = j
    return result
