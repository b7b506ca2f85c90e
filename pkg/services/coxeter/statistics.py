import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Mapping

from ..errors import DomainError
from .permutation import (
    GenSet,
    Permutation,
    conjugate_subset_by_w0,
    length,
    parabolic_length,
)

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
CHARACTERS = ('trivial', 'sigma', 'tau', 'chi')


@dataclass(frozen=True)
class StatWeights:
    """Sparse family b = (b_I) of integer weights on subsets of the generators"""
    b: Mapping[Subset, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'b', {frozenset(I): c for I, c in self.b.items() if c})

    @classmethod
    def length_only(cls) -> "StatWeights":
        return cls({frozenset(): 1})

    @classmethod
    def zero(cls) -> "StatWeights":
        return cls({})

    @classmethod
    def parity_inversions(cls, n: int) -> "StatWeights":
        """b_I = (-1)^|I| 2^(|S| - |I| - 1), the weights whose right weighted length is the L-statistic"""
        S = sorted(GenSet(n).generators)
        weights: Dict[Subset, int] = {}
        # I = S is left out: its weight is not an integer and l^S vanishes
        for size in range(len(S)):
            for I in combinations(S, size):
                weights[frozenset(I)] = (-1) ** size * 2 ** (len(S) - size - 1)
        return cls(weights)

    def conjugate_by_w0(self, n: int) -> "StatWeights":
        return StatWeights({conjugate_subset_by_w0(I, n): c for I, c in self.b.items()})

    def key(self) -> tuple:
        return tuple(sorted((tuple(sorted(I)), c) for I, c in self.b.items()))


def weighted_length(w: Permutation, b: StatWeights, side: str = 'left') -> int:
    return sum(c * parabolic_length(w, I, side) for I, c in b.b.items())


def L_statistic(w: Permutation) -> int:
    """Inversions (i, j) with i and j of opposite parity"""
    images = w.images
    n = len(images)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if (j - i) % 2 and images[i] > images[j]
    )


def is_chessboard(w: Permutation) -> bool:
    parity = (1 + w(1)) % 2
    return all((i + v) % 2 == parity for i, v in enumerate(w.images, start=1))


def chessboard_stream(n: int) -> Iterator[Permutation]:
    """The chessboard elements of S_n in lexicographic order of their words"""
    images: List[int] = []
    used = [False] * (n + 1)

    def extend(parity: int) -> Iterator[Permutation]:
        position = len(images) + 1
        if position > n:
            yield Permutation(tuple(images))
            return
        for v in range(1, n + 1):
            if not used[v] and (position + v) % 2 == parity:
                used[v] = True
                images.append(v)
                yield from extend(parity)
                images.pop()
                used[v] = False

    for first in range(1, n + 1):
        parity = (1 + first) % 2
        if parity and n % 2:
            continue
        used[first] = True
        images.append(first)
        yield from extend(parity)
        images.pop()
        used[first] = False


def character(w: Permutation, which: str = 'trivial', epsilon: int = 1) -> int:
    """
    Linear characters: sigma is the sign, tau is trivial exactly on the
    parity-preserving chessboard elements, chi is sigma twisted by tau for
    even n and epsilon = -1.
    """
    if which == 'trivial':
        return 1
    if which == 'sigma':
        return -1 if length(w) % 2 else 1
    if which == 'tau':
        if not is_chessboard(w):
            raise DomainError(f"tau is only defined on chessboard elements, got {w.images}")
        return 1 if all(i % 2 == v % 2 for i, v in enumerate(w.images, start=1)) else -1
    if which == 'chi':
        if epsilon not in (1, -1):
            raise DomainError(f"epsilon must be +1 or -1, got {epsilon}")
        sigma = character(w, 'sigma')
        if w.n % 2 or epsilon == 1:
            return sigma
        return sigma * character(w, 'tau')
    raise DomainError(f"Unknown character {which}. Supported characters: {', '.join(CHARACTERS)}")


def characters(w: Permutation, which: str, epsilon: int = 1) -> int:
    return character(w, which, epsilon)
