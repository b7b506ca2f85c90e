"""
Vectorized sweep of the chessboard subgroup.

A parity-preserving chessboard element is a pair (alpha, beta) of
arrangements: alpha places the odd values on the odd positions and beta
the even values on the even positions. For even n the parity-swapping
coset is swept the same way with the value sets exchanged. For a fixed
alpha every beta is handled at once as one row of a numpy array; the
(descent set, L, sign) triples are accumulated with np.bincount.
"""
import logging
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError
from ..exactalg.laurent import LaurentPoly
from .permutation import GenSet, Permutation, permutation_stream
from .statistics import chessboard_stream

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Task = Tuple[int, str, int, int, bool]

CHUNK_SIZE = 720
SUBGROUPS = ('full', 'chessboard')


def subgroup_stream(n: int, subgroup: str) -> Iterator[Permutation]:
    if subgroup == 'full':
        return permutation_stream(n)
    if subgroup == 'chessboard':
        return chessboard_stream(n)
    raise DomainError(f"Unknown subgroup {subgroup}. Supported subgroups: {', '.join(SUBGROUPS)}")


def chessboard_size(n: int) -> int:
    size = factorial((n + 1) // 2) * factorial(n // 2)
    return 2 * size if n % 2 == 0 else size


def _max_L(n: int) -> int:
    return ((n + 1) // 2) * (n // 2)


@lru_cache(maxsize=None)
def _arrangements(values: Tuple[int, ...]) -> Tuple[np.ndarray, np.ndarray]:
    """All orderings of values (lexicographic) and their inversion counts"""
    k = len(values)
    perms = np.array(list(permutations(values)), dtype=np.int16).reshape(-1, k)
    inversions = np.zeros(len(perms), dtype=np.int32)
    for i in range(k):
        for j in range(i + 1, k):
            inversions += perms[:, i] > perms[:, j]
    return perms, inversions


def _value_sets(n: int, coset: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    odd_values = tuple(range(1, n + 1, 2))
    even_values = tuple(range(2, n + 1, 2))
    if coset == 'preserve':
        return odd_values, even_values
    return even_values, odd_values


def _kernel_chunk(task: Task) -> np.ndarray:
    """bincount of the keys ((D_mask * (Lmax + 1)) + L) * 2 + negative over one range of alphas"""
    n, coset, start, stop, flip = task
    on_odd, on_even = _value_sets(n, coset)
    alphas, alpha_inv = _arrangements(on_odd)
    betas, beta_inv = _arrangements(on_even)
    alphas, alpha_inv = alphas[start:stop], alpha_inv[start:stop]
    nb = len(betas)
    odd_cols = np.repeat(alphas, nb, axis=0)
    even_cols = np.tile(betas, (len(alphas), 1))

    def column(position: int) -> np.ndarray:
        if position % 2:
            return odd_cols[:, (position - 1) // 2]
        return even_cols[:, position // 2 - 1]

    L = np.zeros(len(odd_cols), dtype=np.int64)
    for p in range(odd_cols.shape[1]):
        for e in range(even_cols.shape[1]):
            left, right = 2 * p + 1, 2 * e + 2
            if left < right:
                L += odd_cols[:, p] > even_cols[:, e]
            else:
                L += even_cols[:, e] > odd_cols[:, p]

    mask = np.zeros(len(odd_cols), dtype=np.int64)
    for i in range(1, n):
        mask |= (column(i) > column(i + 1)).astype(np.int64) << (i - 1)

    negative = (np.repeat(alpha_inv, nb) + np.tile(beta_inv, len(alphas)) + L) & 1
    if flip:
        negative ^= 1
    width = _max_L(n) + 1
    keys = (mask * width + L) * 2 + negative
    return np.bincount(keys, minlength=(1 << (n - 1)) * width * 2)


def chessboard_tasks(n: int, epsilon: int = 1, chunk_size: int = CHUNK_SIZE) -> List[Task]:
    """Index-range chunks covering the chessboard subgroup, each carrying whether chi flips sign on it"""
    if n < 1:
        raise DomainError(f"The chessboard kernel needs n >= 1, got {n}")
    if epsilon not in (1, -1):
        raise DomainError(f"epsilon must be +1 or -1, got {epsilon}")
    cosets = [('preserve', False)]
    if n % 2 == 0:
        cosets.append(('swap', epsilon == -1))
    tasks = []
    count = factorial((n + 1) // 2)
    for coset, flip in cosets:
        for start in range(0, count, chunk_size):
            tasks.append((n, coset, start, min(start + chunk_size, count), flip))
    return tasks


def chessboard_counts(
    n: int,
    epsilon: int = 1,
    mapper: Optional[Callable[[Callable, Sequence[Task]], List[np.ndarray]]] = None,
) -> np.ndarray:
    """Signed counts: result[D_mask, L] = sum of chi_epsilon(w) over chessboard w with that descent set and L"""
    tasks = chessboard_tasks(n, epsilon)
    mapper = mapper or (lambda func, chunks: [func(chunk) for chunk in chunks])
    total = np.zeros((1 << (n - 1)) * (_max_L(n) + 1) * 2, dtype=np.int64)
    for part in mapper(_kernel_chunk, tasks):
        total += part
    signed = total[0::2] - total[1::2]
    return signed.reshape(1 << (n - 1), _max_L(n) + 1)


def zeta_transform_array(counts: np.ndarray) -> np.ndarray:
    """Row J becomes the sum of the rows D with D contained in J"""
    result = counts.copy()
    rows = result.shape[0]
    masks = np.arange(rows)
    bit = 1
    while bit < rows:
        selected = masks[(masks & bit) != 0]
        result[selected] += result[selected ^ bit]
        bit <<= 1
    return result


def row_to_poly(row: np.ndarray, var: str = 'Y') -> LaurentPoly:
    return LaurentPoly({int(e): int(c) for e, c in enumerate(row) if c}, var)


def chessboard_buckets(n: int, epsilon: int = 1, var: str = 'Y') -> Dict[Subset, LaurentPoly]:
    """Same value as descent_accumulate over the chessboard stream with the L-statistic and chi_epsilon"""
    counts = chessboard_counts(n, epsilon)
    buckets = {}
    for mask in range(counts.shape[0]):
        poly = row_to_poly(counts[mask], var)
        if not poly.is_zero():
            buckets[GenSet.from_mask(mask)] = poly
    return buckets
