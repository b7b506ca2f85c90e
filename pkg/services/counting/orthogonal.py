"""
Counts of non-degenerate flags in quadratic spaces.

The count of record is the sum over the isometry types of the orthogonal
decompositions V = W_1 + ... + W_{s+1} cut out by a flag; the normalized
closed forms factor over the bisecting map. Both are evaluated and each
checks the other.
"""
import logging
from typing import Iterable, List, Optional, Tuple

from ..compositions.compositions import bisect, composition_of
from ..errors import ConsistencyError, DomainError
from ..exactalg.laurent import LaurentPoly, poly_product
from ..exactalg.qbinomial import gaussian_multinomial
from ..exactalg.ratfunc import RatFunc
from .orders import p_orthogonal, p_sharp

logger = logging.getLogger(__name__)


def validate_orthogonal(n: int, epsilon: Optional[int]) -> None:
    if n < 1:
        raise DomainError(f"Dimension must be positive, got {n}")
    if n % 2 == 0 and epsilon not in (1, -1):
        raise DomainError(f"Even-dimensional quadratic spaces need epsilon = +1 or -1, got {epsilon}")
    if n % 2 and epsilon is not None:
        raise DomainError(f"epsilon only applies to even dimensions, got {epsilon} for n = {n}")


def _validate_flag_type(n: int, J: Iterable[int]) -> frozenset:
    J = frozenset(J)
    if not J <= frozenset(range(1, n)):
        raise DomainError(f"Flag type {sorted(J)} is not a subset of [{n - 1}]")
    return J


def _parts(n: int, J: frozenset) -> List[int]:
    members = [0] + sorted(J) + [n]
    return [b - a for a, b in zip(members, members[1:])]


def _sign_sum(parts: List[int], constraint: int) -> LaurentPoly:
    """
    sum over sign tuples with product = constraint of prod over even parts k of (q^(k/2) + sign),
    i.e. (prod (g+ + g-) + constraint * prod (g+ - g-)) / 2
    """
    total = poly_product(
        (LaurentPoly.monomial(k // 2, 2, 'q') if k % 2 == 0 else LaurentPoly.constant(2, 'q') for k in parts),
        'q',
    )
    twisted = poly_product(
        (LaurentPoly.constant(2 if k % 2 == 0 else 0, 'q') for k in parts),
        'q',
    )
    return (total + twisted * constraint).scale_exact(2)


def _epsilon_sum(n: int, epsilon: int, J: frozenset, eta: int) -> LaurentPoly:
    parts = _parts(n, J)
    cut = bisect(J, n).cut
    constraint = eta ** (n // 2 - cut) * epsilon
    numerator = p_orthogonal(n, epsilon if n % 2 == 0 else None) * _sign_sum(parts, constraint)
    denominator = poly_product((p_sharp(k) for k in parts), 'q')
    return RatFunc(numerator, denominator).to_polynomial()


def a_orthogonal(n: int, epsilon: Optional[int], J: Iterable[int]) -> LaurentPoly:
    """a^J_{n,eps}(q), evaluated for both values of eta (and both signs of the kernel for odd n)"""
    validate_orthogonal(n, epsilon)
    J = _validate_flag_type(n, J)
    signs = [epsilon] if n % 2 == 0 else [1, -1]
    values = {(eps, eta): _epsilon_sum(n, eps, J, eta) for eps in signs for eta in (1, -1)}
    distinct = set(values.values())
    if len(distinct) != 1:
        logger.error(f"Error in a_orthogonal: n={n} J={sorted(J)} depends on eta: {values}")
        raise ConsistencyError(f"a_orthogonal n={n} eps={epsilon} J={sorted(J)} depends on eta")
    return distinct.pop()


def _one_minus(i: int) -> LaurentPoly:
    return 1 - LaurentPoly.monomial(i, 1, 'Y')


def _binomial_upto(m: int, members: Iterable[int]) -> LaurentPoly:
    """binom(m, members)_Y where members may contain 0 or m (factors equal to 1)"""
    return gaussian_multinomial(m, {x for x in members if 0 < x < m}, 'Y')


def prop3_expressions(n: int, epsilon: Optional[int], J: Iterable[int]) -> Tuple[LaurentPoly, LaurentPoly]:
    """The two displayed closed forms of alpha^J in Y = q^-2, before any division by 1 + eps q^-m"""
    J = _validate_flag_type(n, J)
    m = n // 2
    result = bisect(J, n)
    H = result.phi
    _, N, _ = composition_of(H, m)
    if n % 2 == 0 and all(j % 2 == 0 for j in J):
        return _binomial_upto(m, (j // 2 for j in J)), _binomial_upto(m, H)
    first = _binomial_upto(N, result.phi0) * poly_product((_one_minus(i) for i in range(N + 1, m + 1)), 'Y')
    second = _binomial_upto(m, H | {N}) * _one_minus(1) ** (m - N)
    return first, second


def alpha_orthogonal_prop3(n: int, epsilon: Optional[int], J: Iterable[int]) -> LaurentPoly:
    validate_orthogonal(n, epsilon)
    J = _validate_flag_type(n, J)
    first, second = prop3_expressions(n, epsilon, J)
    if first != second:
        logger.error(f"Error in alpha_orthogonal_prop3: n={n} J={sorted(J)}: {first} != {second}")
        raise ConsistencyError(f"Closed forms disagree for n={n} J={sorted(J)}: {first} vs {second}")
    alpha = first.power_substitute(-2, 'q')
    if n % 2 == 0 and any(j % 2 for j in J):
        divisor = LaurentPoly({0: 1, -(n // 2): epsilon}, 'q')
        alpha = (RatFunc(alpha) / RatFunc(divisor)).to_polynomial()
    return alpha


def a_orthogonal_typed(n: int, epsilon: Optional[int], j: int, delta: Optional[int] = None) -> RatFunc:
    """Non-degenerate j-dimensional subspaces (of type delta when j is even), as a quotient of group orders"""
    validate_orthogonal(n, epsilon)
    if not 1 <= j <= n - 1:
        raise DomainError(f"Subspace dimension must lie in [1, {n - 1}], got {j}")
    if j % 2 == 0 and delta not in (1, -1):
        raise DomainError(f"Even-dimensional subspaces need delta = +1 or -1, got {delta}")
    if j % 2 and delta is not None:
        raise DomainError(f"delta only applies to even subspace dimensions, got {delta}")
    m, h = n // 2, j // 2
    if n % 2 and j % 2:
        numerator = p_orthogonal(n).shift(m - h) * 2
        return RatFunc(numerator, p_orthogonal(j) * p_sharp(n - j))
    if j % 2:
        return RatFunc(p_orthogonal(n, epsilon) * 2, p_orthogonal(j) * p_orthogonal(n - j))
    if n % 2:
        return RatFunc(p_orthogonal(n), p_orthogonal(j, delta) * p_orthogonal(n - j))
    return RatFunc(p_orthogonal(n, epsilon), p_orthogonal(j, delta) * p_orthogonal(n - j, delta * epsilon))
