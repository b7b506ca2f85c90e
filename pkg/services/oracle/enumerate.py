"""Exhaustive enumeration: subspaces by pivot profile, flags by depth-first extension."""
import logging
from itertools import combinations
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from ..errors import ConsistencyError, DomainError
from ..exactalg.qbinomial import gaussian_binomial
from .fields import SmallField
from .linalg import combine, embed_complement, is_invertible, left_nullspace, mat_mul, span_vectors
from .spaces import FlagOfForms, GramSpace

logger = logging.getLogger(__name__)

Target = Union[GramSpace, FlagOfForms]


def subspace_count(n: int, dim: int, order: int) -> int:
    return int(gaussian_binomial(n, dim, 'q').evaluate_at(order))


def subspaces(F: SmallField, n: int, dim: int) -> Iterator[np.ndarray]:
    """Every dim-dimensional subspace of F^n once, as its RREF basis"""
    if not 0 <= dim <= n:
        raise DomainError(f"Subspace dimension must lie in [0, {n}], got {dim}")
    for pivots in combinations(range(n), dim):
        base = np.zeros((dim, n), dtype=np.int64)
        stars = []
        for row, p in enumerate(pivots):
            base[row, p] = 1
            stars.extend((row, col) for col in range(p + 1, n) if col not in pivots)
        if not stars:
            yield base
            continue
        rows, cols = zip(*stars)
        for values in np.indices((F.order,) * len(stars)).reshape(len(stars), -1).T:
            U = base.copy()
            U[rows, cols] = values
            yield U


def flag_ops(n: int, J: Iterable[int], order: int) -> int:
    """Upper estimate of the elementary steps of count_flags"""
    total, candidates, previous = 0, 1, 0
    for j in sorted(set(J)):
        candidates *= subspace_count(n - previous, j - previous, order)
        total += candidates
        previous = j
    return max(total, 1) * n ** 3


def count_flags(target: Target, J: Iterable[int]) -> int:
    """Non-degenerate flags of type J, smallest member first"""
    J = sorted(set(J))
    n, F = target.n, target.field
    if any(not 1 <= j <= n - 1 for j in J):
        raise DomainError(f"Flag type {J} is not a subset of [{n - 1}]")

    def extend(U: np.ndarray, level: int) -> int:
        if level == len(J):
            return 1
        k, total = U.shape[0], 0
        for S in subspaces(F, n - k, J[level] - k):
            W = embed_complement(F, U, S)
            if target.is_nondegenerate(W):
                total += extend(W, level + 1)
        return total

    return extend(np.zeros((0, n), dtype=np.int64), 0)


def witt_type(space: GramSpace, U: np.ndarray) -> int:
    """+1 or -1: strip hyperbolic pairs off the non-degenerate even-dimensional quadratic subspace U"""
    F = space.field
    current = U
    while current.shape[0]:
        vectors = span_vectors(F, current)[1:]
        isotropic = vectors[space.quad_values(vectors) == 0]
        if len(isotropic) == 0:
            if current.shape[0] != 2:
                raise ConsistencyError(f"Anisotropic quadratic subspace of dimension {current.shape[0]}")
            return -1
        v = isotropic[0]
        pairing = mat_mul(F, mat_mul(F, v[None, :], space.gram), vectors.T)[0]
        partners = vectors[pairing == 1]
        if len(partners) == 0:
            raise DomainError("Subspace is degenerate, it has no Witt type")
        w = partners[0]
        fw = int(space.quad_values(w[None, :])[0])
        w = F.sub(w, F.mul[fw, v])
        pair = np.vstack([v, w])
        coefficients = left_nullspace(F, mat_mul(F, mat_mul(F, current, space.gram), pair.T))
        current = combine(F, coefficients, current)
    return 1


def count_typed_subspaces(space: GramSpace, j: int, delta: Optional[int] = None) -> int:
    """Non-degenerate j-dimensional subspaces, restricted to Witt type delta when j is even"""
    if space.form_kind != 'quadratic':
        raise DomainError(f"Typed counts need a quadratic space, got {space.form_kind}")
    if not 1 <= j <= space.n:
        raise DomainError(f"Subspace dimension must lie in [1, {space.n}], got {j}")
    if j % 2 and delta is not None:
        raise DomainError(f"delta only applies to even subspace dimensions, got {delta}")
    if j % 2 == 0 and delta not in (1, -1):
        raise DomainError(f"Even-dimensional subspaces need delta = +1 or -1, got {delta}")
    count = 0
    for U in subspaces(space.field, space.n, j):
        if space.is_nondegenerate(U) and (delta is None or witt_type(space, U) == delta):
            count += 1
    return count


def matrices(F: SmallField, n: int) -> Iterator[np.ndarray]:
    for entries in np.indices((F.order,) * (n * n)).reshape(n * n, -1).T:
        yield entries.reshape(n, n)


def isometry_group_order(space: GramSpace) -> int:
    """Invertible P with P G sigma(P)^T = G, and f(P e_i) = f(e_i) for quadratic spaces"""
    F = space.field
    count = 0
    for P in matrices(F, space.n):
        if not np.array_equal(space.restricted_gram(P), space.gram):
            continue
        if space.quad_diag is not None and not np.array_equal(space.quad_values(P), space.quad_diag):
            continue
        if is_invertible(F, P):
            count += 1
    return count


def random_basis_change(F: SmallField, n: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        P = rng.integers(0, F.order, size=(n, n))
        if is_invertible(F, P):
            return P.astype(np.int64)
