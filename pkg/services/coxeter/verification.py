import logging
from collections import Counter
from functools import partial
from typing import Dict, FrozenSet, Iterable, List, Optional

from ..exactalg.laurent import LaurentPoly
from ..reports import Failure, Report
from .accumulate import descent_accumulate, theorem1_ig, zeta_transform
from .chessboard import chessboard_buckets, chessboard_size, subgroup_stream
from .permutation import (
    GenSet,
    Permutation,
    conjugate_subset_by_w0,
    in_parabolic_subgroup,
    left_descents,
    length,
    longest_element,
    parabolic_length,
    permutation_stream,
    shortest_coset_representative,
)
from .statistics import (
    L_statistic,
    StatWeights,
    character,
    chessboard_stream,
    is_chessboard,
    weighted_length,
)

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]


def verify_lemma2(n: int) -> Report:
    """The four w0-duality identities of the parabolic lengths, for every w in S_n and every I"""
    report = Report(claim=f"lemma2 n={n}")
    w0 = longest_element(n)
    subsets = GenSet(n).subsets()
    for I in subsets:
        I_w0 = conjugate_subset_by_w0(I, n)
        left_w0 = parabolic_length(w0, I, 'left')
        right_w0 = parabolic_length(w0, I, 'right')
        for w in permutation_stream(n):
            identities = {
                'l_L(w0 w) + l_L(w)': parabolic_length(w0 * w, I, 'left') + parabolic_length(w, I, 'left') == left_w0,
                'l_L(w w0) + l_L^w0(w)': parabolic_length(w * w0, I, 'left') + parabolic_length(w, I_w0, 'left') == left_w0,
                'l_R(w0 w) + l_R^w0(w)': parabolic_length(w0 * w, I, 'right') + parabolic_length(w, I_w0, 'right') == right_w0,
                'l_R(w w0) + l_R(w)': parabolic_length(w * w0, I, 'right') + parabolic_length(w, I, 'right') == right_w0,
            }
            for name, ok in identities.items():
                report.check(ok, Failure(J=sorted(I), context={'w': list(w.images), 'identity': name}))
    return report


def verify_lemma1(n: int) -> Report:
    """w = u v with u the shortest element of wW_I, v in W_I and l(w) = l^I_L(w) + l(v)"""
    report = Report(claim=f"lemma1 n={n}")
    for I in GenSet(n).subsets():
        for w in permutation_stream(n):
            u = shortest_coset_representative(w, I)
            v = u.inverse() * w
            ok = (
                u * v == w
                and in_parabolic_subgroup(v, I)
                and length(u) == parabolic_length(w, I, 'left')
                and length(w) == parabolic_length(w, I, 'left') + length(v)
            )
            report.check(ok, Failure(J=sorted(I), context={'w': list(w.images)}))
    return report


def coset_minimum(w: Permutation, I: Iterable[int]) -> int:
    """min over v in W_I of l(w v), by brute force"""
    I = frozenset(I)
    return min(length(w * v) for v in permutation_stream(w.n) if in_parabolic_subgroup(v, I))


def verify_descent_complement(n: int) -> Report:
    report = Report(claim=f"descent complement n={n}")
    w0 = longest_element(n)
    S = GenSet(n).generators
    for w in permutation_stream(n):
        report.check(left_descents(w * w0) == S - left_descents(w), Failure(context={'w': list(w.images)}))
    return report


def verify_length_duality(n: int) -> Report:
    report = Report(claim=f"length duality n={n}")
    w0 = longest_element(n)
    top = length(w0)
    for w in permutation_stream(n):
        ok = length(w) + length(w * w0) == top and length(w) + length(w0 * w) == top
        report.check(ok, Failure(context={'w': list(w.images)}))
    return report


def verify_L_statistic(n: int) -> Report:
    """The parity-inversion count equals the weighted right length with the alternating power-of-two weights"""
    report = Report(claim=f"L statistic n={n}")
    weights = StatWeights.parity_inversions(n)
    w0 = longest_element(n)
    top = L_statistic(w0)
    for w in permutation_stream(n):
        L = L_statistic(w)
        ok = L == weighted_length(w, weights, 'right') and L + L_statistic(w * w0) == top
        report.check(ok, Failure(context={'w': list(w.images), 'L': L}))
    return report


def verify_chessboard_subgroup(n: int) -> Report:
    report = Report(claim=f"chessboard subgroup n={n}")
    elements = list(chessboard_stream(n))
    members = set(elements)
    report.check(len(elements) == chessboard_size(n), Failure(context={'size': len(elements)}))
    report.check(all(is_chessboard(w) for w in elements))
    for v in elements:
        report.check(v.inverse() in members, Failure(context={'w': list(v.images)}))
        for w in elements:
            report.check(v * w in members, Failure(context={'v': list(v.images), 'w': list(w.images)}))
    return report


def verify_theorem1(
    n: int,
    subgroup: str = 'full',
    b: Optional[StatWeights] = None,
    char: str = 'trivial',
    epsilon: int = 1,
) -> Report:
    """
    IG_{b,L}(Y^-1, X^-1) = (-1)^(n-1) chi(w0) Y^(-b.l_L(w0)) IG_{b^w0,L}(Y, X)
    IG_{b,R}(Y^-1, X^-1) = (-1)^(n-1) chi(w0) Y^(-b.l_R(w0)) IG_{b,R}(Y, X)
    """
    b = b or StatWeights.length_only()
    report = Report(claim=f"theorem1 n={n} subgroup={subgroup} char={char}")
    w0 = longest_element(n)
    sign = (-1) ** (n - 1) * character(w0, char, epsilon)
    cases = [
        ('left', b.conjugate_by_w0(n), weighted_length(w0, b, 'left')),
        ('right', b, weighted_length(w0, b, 'right')),
    ]
    for side, dual, top in cases:
        ig = theorem1_ig(n, subgroup, b, char, side, epsilon)
        lhs = ig.invert_vars().invert_base()
        rhs = theorem1_ig(n, subgroup, dual, char, side, epsilon).scale(LaurentPoly.monomial(-top, sign, 'Y'))
        for K in set(lhs.coeffs) | set(rhs.coeffs):
            report.compare(K, lhs.coefficient(K), rhs.coefficient(K), side=side)
    return report


def m_set(n: int) -> Report:
    """
    Elements w such that for every generator s, D_L(w) != D_L(ws) or L(w) != L(ws).
    Equality with the chessboard subgroup is reported, not asserted; closure under
    right multiplication by w0 is checked.
    """
    report = Report(claim=f"m-set n={n}")
    members: List[Permutation] = []
    for w in permutation_stream(n):
        images = w.images
        descents, L = left_descents(w), L_statistic(w)
        distinguished = True
        for i in range(1, n):
            # w s_i swaps the values i and i+1 in the word of w
            swapped = Permutation(tuple(i + 1 if v == i else i if v == i + 1 else v for v in images))
            if left_descents(swapped) == descents and L_statistic(swapped) == L:
                distinguished = False
                break
        if distinguished:
            members.append(w)
    member_set = set(members)
    w0 = longest_element(n)
    for w in members:
        report.check(w * w0 in member_set, Failure(context={'w': list(w.images), 'closure': 'w0'}))
    chessboard = set(chessboard_stream(n))
    histogram = Counter(length(w) for w in members)
    report.details = {
        'size': len(members),
        'chessboard_size': len(chessboard),
        'equal_to_chessboard': member_set == chessboard,
        'intersection_with_chessboard': len(member_set & chessboard),
        'length_histogram': {str(k): histogram[k] for k in sorted(histogram)},
    }
    return report


def signed_L_buckets(n: int, subgroup: str = 'full', char: str = 'sigma', epsilon: int = 1) -> Dict[Subset, LaurentPoly]:
    return descent_accumulate(subgroup_stream(n, subgroup), L_statistic, partial(character, which=char, epsilon=epsilon))


def full_group_sign_sum(n: int, J: Iterable[int]) -> LaurentPoly:
    """sum over w in S_n with D_L(w) in J of sigma(w) q^(-L(w))"""
    J = GenSet(n).validate(J)
    buckets = signed_L_buckets(n, 'full', 'sigma')
    total = zeta_transform(buckets, range(1, n))[J]
    return total.invert_var().with_var('q')



def verify_chessboard_kernel(n: int) -> Report:
    """The vectorized chessboard sweep against the generic accumulation, for every admissible epsilon"""
    report = Report(claim=f"chessboard kernel n={n}")
    for epsilon in ((1, -1) if n % 2 == 0 else (1,)):
        fast = chessboard_buckets(n, epsilon)
        slow = signed_L_buckets(n, 'chessboard', 'chi', epsilon)
        for J in set(fast) | set(slow):
            zero = LaurentPoly.zero('Y')
            report.compare(J, fast.get(J, zero), slow.get(J, zero), epsilon=epsilon)
    return report
