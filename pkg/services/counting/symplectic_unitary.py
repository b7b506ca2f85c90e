"""
Closed and recursive counts of non-degenerate flags in symplectic and
unitary spaces carrying a flag of forms of type I.

For I empty the count is an index of isometry groups, a Gaussian
multinomial in Y = q^-2 (symplectic) or Y = -1/q (unitary). For nonempty
I the count recurses over the smallest member j of J: the admissible
tuples t record the dimensions of U_j meeting the radicals R_i.
"""
import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import FrozenSet, Iterable, Iterator, Tuple

from ..exactalg.laurent import LaurentPoly
from ..exactalg.qbinomial import gaussian_multinomial
from .spaces import FormedSpaceSpec

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]


def normalize(a: LaurentPoly) -> LaurentPoly:
    """a / q^deg(a); zero stays zero"""
    if a.is_zero():
        return a
    return a.shift(-a.degree())


def alpha_base_sp_u(spec: FormedSpaceSpec, J: Iterable[int]) -> LaurentPoly:
    """binom(gamma n, gamma J)_Y for a plain symplectic or unitary space"""
    J = spec.validate_flag_type(J)
    if spec.is_vacuous(J):
        return LaurentPoly.zero('q')
    return spec.from_Y(gaussian_multinomial(spec.gamma_n, spec.scaled(J), 'Y'))


def _plain(kind: str, n: int) -> FormedSpaceSpec:
    return FormedSpaceSpec(kind, n)


def admissible_tuples(kind: str, n: int, I: Tuple[int, ...], j: int) -> Iterator[Tuple[int, ...]]:
    """Dimension tuples t of U_j intersected with the radicals R_{i_1} < ... < R_{i_r}"""
    step = 1 if kind == 'unitary' else 2
    bounds = (0,) + I + (n,)
    for t in combinations_with_replacement(range(0, j + 1, step), len(I)):
        full = (0,) + t + (j,)
        if all(
            j - (n - bounds[rho]) - full[rho - 1] <= full[rho] - full[rho - 1] <= bounds[rho] - bounds[rho - 1]
            for rho in range(1, len(bounds))
        ):
            yield t


def layer_count(kind: str, n: int, I: Tuple[int, ...], t: Tuple[int, ...], j: int) -> LaurentPoly:
    """Number of non-degenerate U_j with dim(U_j meet R_{i_rho}) = t_rho"""
    two_gamma = 2 if kind == 'unitary' else 1
    bounds = (0,) + I + (n,)
    full = (0,) + t + (j,)
    result = LaurentPoly.one('q')
    for rho in range(1, len(bounds)):
        width = bounds[rho] - bounds[rho - 1]
        k = full[rho] - full[rho - 1]
        factor = _a_recursive(kind, width, frozenset(), frozenset({k}) - {0, width})
        result = result * factor.shift(two_gamma * k * (bounds[rho - 1] - full[rho - 1]))
    return result


@lru_cache(maxsize=None)
def _a_recursive(kind: str, n: int, I: Subset, J: Subset) -> LaurentPoly:
    two_gamma = 2 if kind == 'unitary' else 1
    if not J:
        return LaurentPoly.one('q')
    if not I:
        alpha = alpha_base_sp_u(_plain(kind, n), J)
        return alpha.shift(two_gamma * gaussian_multinomial(n, J, 'q').degree())
    j = min(J)
    rest = frozenset(x - j for x in J if x != j)
    radicals = tuple(sorted(I))
    total = LaurentPoly.zero('q')
    for t in admissible_tuples(kind, n, radicals, j):
        reduced = frozenset(i - s for i, s in zip(radicals, t) if 1 <= i - s <= n - j - 1)
        total = total + layer_count(kind, n, radicals, t, j) * _a_recursive(kind, n - j, reduced, rest)
    return total


def a_recursive_sp_u(spec: FormedSpaceSpec, J: Iterable[int]) -> LaurentPoly:
    """a^J_{n,I}(q) by recursion over the smallest member of J"""
    J = spec.validate_flag_type(J)
    if spec.is_vacuous(J):
        return LaurentPoly.zero('q')
    return _a_recursive(spec.kind, spec.n, spec.forms_type, J)


def coxeter_complement(spec: FormedSpaceSpec) -> Subset:
    """[gamma n - 1] minus gamma I~"""
    dual = spec.scaled(spec.dual().forms_type)
    return frozenset(range(1, spec.gamma_n)) - dual
