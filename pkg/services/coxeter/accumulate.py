import logging
from collections import defaultdict
from functools import partial
from typing import Callable, DefaultDict, Dict, FrozenSet, Iterable, Mapping, Optional

from ..exactalg.igusa import IgusaFunction, igusa_from_F_coeffs, subsets_of
from ..exactalg.laurent import LaurentPoly
from .chessboard import subgroup_stream
from .permutation import GenSet, Permutation, descent_mask
from .statistics import StatWeights, character, weighted_length

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Statistic = Callable[[Permutation], int]
Character = Callable[[Permutation], int]
Buckets = Dict[Subset, LaurentPoly]


def _trivial(w: Permutation) -> int:
    return 1


def descent_accumulate(
    stream: Iterable[Permutation],
    stat: Statistic,
    char: Optional[Character] = None,
    var: str = 'Y',
) -> Buckets:
    """bucket[D] = sum over w in the stream with D_L(w) = D of char(w) var^stat(w)"""
    char = char or _trivial
    counts: DefaultDict[int, DefaultDict[int, int]] = defaultdict(lambda: defaultdict(int))
    for w in stream:
        counts[descent_mask(w)][stat(w)] += char(w)
    buckets = {GenSet.from_mask(mask): LaurentPoly(terms, var) for mask, terms in counts.items()}
    return {D: poly for D, poly in buckets.items() if not poly.is_zero()}


def merge_buckets(parts: Iterable[Buckets], var: str = 'Y') -> Buckets:
    merged: Dict[Subset, LaurentPoly] = {}
    for part in parts:
        for D, poly in part.items():
            merged[D] = merged.get(D, LaurentPoly.zero(var)) + poly
    return {D: poly for D, poly in merged.items() if not poly.is_zero()}


def zeta_transform(buckets: Mapping[Subset, LaurentPoly], ground: Iterable[int], var: str = 'Y') -> Dict[Subset, LaurentPoly]:
    """J -> sum over D contained in J of bucket[D], for every J contained in ground"""
    ground = sorted(ground)
    table: Dict[int, LaurentPoly] = {GenSet.to_mask(D): poly for D, poly in buckets.items()}
    for k in ground:
        bit = 1 << (k - 1)
        for mask in list(_masks_of(ground)):
            if mask & bit and (mask ^ bit) in table:
                table[mask] = table.get(mask, LaurentPoly.zero(var)) + table[mask ^ bit]
    return {J: table.get(GenSet.to_mask(J), LaurentPoly.zero(var)) for J in subsets_of(ground)}


def _masks_of(ground):
    full = GenSet.to_mask(ground)
    mask = full
    while True:
        yield mask
        if mask == 0:
            return
        mask = (mask - 1) & full


def weighted_statistic(w: Permutation, b: StatWeights, side: str) -> int:
    return weighted_length(w, b, side)


def theorem1_ig(
    n: int,
    subgroup: str,
    b: StatWeights,
    char: str = 'trivial',
    side: str = 'left',
    epsilon: int = 1,
    var: str = 'Y',
) -> IgusaFunction:
    """sum over w in the subgroup of chi(w) var^(b.l_side(w)) sum_{D_L(w) <= J} F_J"""
    buckets = descent_accumulate(
        subgroup_stream(n, subgroup),
        partial(weighted_statistic, b=b, side=side),
        partial(character, which=char, epsilon=epsilon),
        var,
    )
    coeffs = zeta_transform(buckets, range(1, n), var)
    return igusa_from_F_coeffs(n, coeffs, var)
