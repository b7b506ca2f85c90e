"""
Compositions attached to subsets and the bisecting map.

A subset I of [n] cuts [0, N] at its elements below N = max([n]_0 - I);
the gaps form the composition C(I, n). Halving every part and keeping the
partial sums bisects a flag type J of [n-1] to a subset of [m], m = n // 2.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

from ..config import get_settings
from ..errors import DomainError, ResourceBoundError
from ..exactalg.igusa import subsets_of

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(x < 1 for x in parts):
            raise DomainError(f"Composition parts must be positive, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class BisectResult:
    phi: Subset
    cut: int
    phi0: Subset


def _validate_subset(I: Iterable[int], n: int) -> Subset:
    I = frozenset(I)
    if any(i < 1 or i > n for i in I):
        raise DomainError(f"{sorted(I)} is not a subset of [{n}]")
    return I


def composition_of(I: Iterable[int], n: int) -> Tuple[Composition, int, int]:
    """(C(I, n), N(I, n), ||I||_n)"""
    I = _validate_subset(I, n)
    N = max(k for k in range(n + 1) if k not in I)
    cuts = [0] + sorted(i for i in I if i < N) + ([N] if N else [])
    parts = tuple(b - a for a, b in zip(cuts, cuts[1:]))
    return Composition(parts), N, len(parts)


def bisect(I: Iterable[int], n: int) -> BisectResult:
    composition, _, _ = composition_of(I, n)
    m = n // 2
    halves = [x // 2 for x in composition.parts]
    cut = sum(halves)
    partial, running = set(), 0
    for half in halves:
        running += half
        partial.add(running)
    phi0 = frozenset(partial - {0, cut})
    return BisectResult(phi=phi0 | frozenset(range(cut + 1, m + 1)), cut=cut, phi0=phi0)


def _validate_fiber_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"Fibers need n >= 1, got {n}")
    limit = get_settings().max_fiber_n
    if n > limit:
        logger.error(f"Error in fiber: n = {n} exceeds {limit}")
        raise ResourceBoundError('fiber_n', n, limit)


@lru_cache(maxsize=None)
def _phi_table(n: int) -> Dict[Subset, Subset]:
    logger.debug(f"Bisecting all flag types of [{n - 1}]")
    return {J: bisect(J, n).phi for J in subsets_of(range(1, n))}


def phi_table(n: int) -> Dict[Subset, Subset]:
    """J -> phi(J) for every J of [n-1]"""
    _validate_fiber_n(n)
    return _phi_table(n)


def fiber(H: Iterable[int], n: int) -> List[Subset]:
    """Every J of [n-1] with phi(J) = H, in lexicographic order"""
    H = _validate_subset(H, n // 2)
    members = [J for J, phi in phi_table(n).items() if phi == H]
    return sorted(members, key=lambda J: sorted(J))
