"""Polynomial identities used by the inversion arguments, checked exactly over ranges of parameters."""
import logging
from math import comb

from ..reports import Failure, Report
from .igusa import igusa_from_F_coeffs, subsets_of
from .laurent import LaurentPoly, poly_sum
from .qbinomial import gaussian_multinomial

logger = logging.getLogger(__name__)


def _triangular(k: int) -> int:
    return k * (k + 1) // 2


def verify_lemma3(max_size: int = 6) -> Report:
    """sum_{I <= J <= S} F_J(1/X) = (-1)^|S| sum_{S - I <= J <= S} F_J(X) on the e-basis"""
    report = Report(claim=f"lemma3 |S|<={max_size}")
    one = LaurentPoly.one('q')
    for size in range(max_size + 1):
        S = frozenset(range(1, size + 1))
        every = subsets_of(S)
        for I in every:
            above_I = {J: one for J in every if I <= J}
            above_complement = {J: one for J in every if S - I <= J}
            lhs = igusa_from_F_coeffs(size + 1, above_I).invert_vars()
            rhs = igusa_from_F_coeffs(size + 1, above_complement)
            if size % 2:
                rhs = -rhs
            report.check(lhs == rhs, Failure(J=sorted(I), context={'S': size}))
    return report


def identity_i_rhs(i: int) -> LaurentPoly:
    """sum_j binom(i, [i-j, i-1])_Y (Y - 1)^j Y^binom(i-j, 2)"""
    y_minus_one = LaurentPoly({1: 1, 0: -1}, 'Y')
    return poly_sum(
        (
            gaussian_multinomial(i, range(i - j, i), 'Y') * y_minus_one ** j
        ).shift(comb(i - j, 2))
        for j in range(i + 1)
    )


def identity_ii_rhs(i: int) -> LaurentPoly:
    """sum over I <= [i] of (-1)^(i - |I|) binom(i + 1, I)_Y"""
    terms = []
    for I in subsets_of(range(1, i + 1)):
        term = gaussian_multinomial(i + 1, I, 'Y')
        terms.append(term if (i - len(I)) % 2 == 0 else -term)
    return poly_sum(terms, 'Y')


def verify_identity_i(max_i: int = 10) -> Report:
    report = Report(claim=f"identity (i) i<={max_i}")
    for i in range(max_i + 1):
        report.compare([i], LaurentPoly.monomial(_triangular(i), 1, 'Y'), identity_i_rhs(i))
    return report


def verify_identity_ii(max_i: int = 8) -> Report:
    report = Report(claim=f"identity (ii) i<={max_i}")
    for i in range(max_i + 1):
        report.compare([i], LaurentPoly.monomial(_triangular(i), 1, 'Y'), identity_ii_rhs(i))
    return report


def gkp_sum(N: int, M: int) -> int:
    return sum((-1) ** k * comb(N - k, M) * comb(M, k) for k in range(M + 1))


def verify_gkp(max_N: int = 12) -> Report:
    """sum_k (-1)^k binom(N - k, M) binom(M, k) = 1 for 1 <= M <= N"""
    report = Report(claim=f"gkp N<={max_N}")
    for N in range(1, max_N + 1):
        for M in range(1, N + 1):
            value = gkp_sum(N, M)
            report.check(value == 1, Failure(context={'N': N, 'M': M, 'value': value}))
    return report
