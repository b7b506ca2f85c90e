"""
Permutations of [n] = {1, ..., n} in one-line notation.

Permutations act on the right: i^(vw) = (i^v)^w, and the word of w is
(1^w, ..., n^w). With this convention the left descents of w are the
positions where its word decreases.
"""
from dataclasses import dataclass
from itertools import combinations, islice, permutations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..errors import DomainError

Subset = FrozenSet[int]


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images} is not a permutation of [{len(images)}]")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self followed by other"""
        if self.n != other.n:
            raise DomainError(f"Cannot compose permutations of {self.n} and {other.n} letters")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        result = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            result[v - 1] = i
        return Permutation(tuple(result))

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


class GenSet:
    """Adjacent transpositions s_1..s_{n-1} of S_n, identified with the integers 1..n-1"""

    def __init__(self, n: int):
        if n < 1:
            raise DomainError(f"Rank carrier must be positive, got {n}")
        self.n = n

    @property
    def generators(self) -> Subset:
        return frozenset(range(1, self.n))

    def validate(self, I: Iterable[int]) -> Subset:
        I = frozenset(I)
        if not I <= self.generators:
            raise DomainError(f"{sorted(I)} is not a subset of [{self.n - 1}]")
        return I

    def complement(self, I: Iterable[int]) -> Subset:
        return self.generators - self.validate(I)

    def subsets(self) -> List[Subset]:
        ground = sorted(self.generators)
        return [frozenset(c) for size in range(len(ground) + 1) for c in combinations(ground, size)]

    @staticmethod
    def to_mask(I: Iterable[int]) -> int:
        mask = 0
        for i in I:
            mask |= 1 << (i - 1)
        return mask

    @staticmethod
    def from_mask(mask: int) -> Subset:
        result, i = [], 1
        while mask:
            if mask & 1:
                result.append(i)
            mask >>= 1
            i += 1
        return frozenset(result)


def length(w: Permutation) -> int:
    images = w.images
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


def left_descents(w: Permutation) -> Subset:
    images = w.images
    return frozenset(i for i in range(1, len(images)) if images[i - 1] > images[i])


def right_descents(w: Permutation) -> Subset:
    return left_descents(w.inverse())


def descent_mask(w: Permutation) -> int:
    images = w.images
    mask = 0
    for i in range(1, len(images)):
        if images[i - 1] > images[i]:
            mask |= 1 << (i - 1)
    return mask


def _inversion_blocked(I: Subset, i: int, j: int) -> bool:
    return all(k in I for k in range(i, j))


def parabolic_length(w: Permutation, I: Iterable[int], side: str = 'left') -> int:
    """
    Length of the shortest element of wW_I (left) or W_I w (right).

    Right side counts inversions (i, j) whose interval [i, j-1] is not
    contained in I; the left side is the right side of the inverse.
    """
    I = frozenset(I)
    if side == 'left':
        w = w.inverse()
    elif side != 'right':
        raise DomainError(f"Unknown side {side}. Supported sides: left, right")
    images = w.images
    n = len(images)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if images[i] > images[j] and not _inversion_blocked(I, i + 1, j + 1)
    )


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise DomainError(f"longest_element needs n >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def conjugate_subset_by_w0(I: Iterable[int], n: int) -> Subset:
    return frozenset(n - i for i in GenSet(n).validate(I))


def parabolic_blocks(I: Iterable[int], n: int) -> List[List[int]]:
    """Maximal intervals of [n] joined by the generators in I"""
    I = frozenset(I)
    blocks = [[1]]
    for k in range(1, n):
        if k in I:
            blocks[-1].append(k + 1)
        else:
            blocks.append([k + 1])
    return blocks


def shortest_coset_representative(w: Permutation, I: Iterable[int]) -> Permutation:
    """u with uW_I = wW_I of minimal length: values of each block of I sorted along the positions they occupy"""
    images = list(w.images)
    for block in parabolic_blocks(I, w.n):
        values = set(block)
        positions = [p for p, v in enumerate(images) if v in values]
        for p, v in zip(positions, sorted(block)):
            images[p] = v
    return Permutation(tuple(images))


def in_parabolic_subgroup(v: Permutation, I: Iterable[int]) -> bool:
    block_of: Dict[int, int] = {}
    for index, block in enumerate(parabolic_blocks(I, v.n)):
        for k in block:
            block_of[k] = index
    return all(block_of[i] == block_of[v(i)] for i in range(1, v.n + 1))


def permutation_stream(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Permutation]:
    """S_n in lexicographic order of the image words, sliced by index range"""
    for images in islice(permutations(range(1, n + 1)), start, stop):
        yield Permutation(images)
