import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from ..errors import DomainError
from .compositions import Composition, composition_of

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]


@dataclass(frozen=True)
class Refinement:
    """xi_1 <= ... <= xi_k: block i of the refining composition is parts xi_{i-1}+1 .. xi_i"""
    xi: Tuple[int, ...]

    def __post_init__(self):
        xi = tuple(self.xi)
        if any(a > b for a, b in zip(xi, xi[1:])) or any(x < 0 for x in xi):
            raise DomainError(f"Refinement tuple must be nonnegative and weakly increasing, got {xi}")
        object.__setattr__(self, 'xi', xi)

    def blocks(self) -> List[Tuple[int, int]]:
        bounds = (0,) + self.xi
        return list(zip(bounds, bounds[1:]))

    def refines(self, coarse: Composition, fine: Composition) -> bool:
        if len(self.xi) != len(coarse) or (self.xi[-1] if self.xi else 0) != len(fine):
            return False
        return all(
            sum(fine.parts[start:stop]) <= bound
            for (start, stop), bound in zip(self.blocks(), coarse.parts)
        )


def _extend(coarse: Tuple[int, ...], fine: Tuple[int, ...], prefix: List[int]) -> Iterator[Tuple[int, ...]]:
    i = len(prefix)
    start = prefix[-1] if prefix else 0
    if i == len(coarse):
        if start == len(fine):
            yield tuple(prefix)
        return
    if i == len(coarse) - 1:
        stops = [len(fine)]
    else:
        stops = range(start, len(fine) + 1)
    for stop in stops:
        if sum(fine[start:stop]) > coarse[i]:
            break
        prefix.append(stop)
        yield from _extend(coarse, fine, prefix)
        prefix.pop()


def refinement_enumerate(G: Iterable[int], H: Iterable[int], m: int) -> List[Refinement]:
    """Refinements of truncations of C(G) by C(H), lexicographic in xi"""
    coarse, _, _ = composition_of(G, m)
    fine, _, _ = composition_of(H, m)
    return [Refinement(xi) for xi in _extend(coarse.parts, fine.parts, [])]


def refinement_count(G: Iterable[int], H: Iterable[int], m: int) -> int:
    return len(refinement_enumerate(G, H, m))


def complement_intervals(I: Iterable[int], n: int) -> List[Tuple[int, int]]:
    """Maximal intervals [a, b] of [n-1] - I in increasing order"""
    I = frozenset(I)
    intervals: List[Tuple[int, int]] = []
    for k in range(1, n):
        if k in I:
            continue
        if intervals and intervals[-1][1] == k - 1:
            intervals[-1] = (intervals[-1][0], k)
        else:
            intervals.append((k, k))
    return intervals


def induced_refinement(I: Iterable[int], J: Iterable[int], n: int) -> Refinement:
    """xi_i = number of maximal intervals of [n-1] - J inside the first i maximal intervals of [n-1] - I"""
    I, J = frozenset(I), frozenset(J)
    if not I <= J:
        raise DomainError(f"{sorted(I)} is not contained in {sorted(J)}")
    if not J <= frozenset(range(1, n)):
        raise DomainError(f"{sorted(J)} is not a subset of [{n - 1}]")
    coarse = complement_intervals(I, n)
    fine = complement_intervals(J, n)
    xi, count = [], 0
    for _, end in coarse:
        while count < len(fine) and fine[count][1] <= end:
            count += 1
        xi.append(count)
    return Refinement(tuple(xi))
