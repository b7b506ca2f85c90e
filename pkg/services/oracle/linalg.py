"""Row reduction and friends over a SmallField; matrices are 2-d numpy integer arrays of field elements."""
import logging
from typing import List, Tuple

import numpy as np

from .fields import SmallField

logger = logging.getLogger(__name__)


def as_matrix(rows, n: int) -> np.ndarray:
    return np.asarray(rows, dtype=np.int64).reshape(-1, n)


def mat_mul(F: SmallField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    products = F.mul[A[:, :, None], B[None, :, :]]
    result = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        result = F.add[result, products[:, k, :]]
    return result


def rref(F: SmallField, A: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form with its zero rows dropped, and the pivot columns"""
    R = np.array(A, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(R[r:, c])[0]
        if len(nonzero) == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = F.mul[F.inv[R[r, c]], R[r]]
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = F.sub(R[i], F.mul[R[i, c], R[r]])
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F: SmallField, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: SmallField, A: np.ndarray) -> np.ndarray:
    """Basis (rows) of {x : A x = 0}"""
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, p in enumerate(pivots):
            basis[k, p] = F.neg[R[row, f]]
    return basis


def left_nullspace(F: SmallField, A: np.ndarray) -> np.ndarray:
    """Basis (rows) of {c : c A = 0}"""
    return nullspace(F, A.T)


def combine(F: SmallField, coefficients: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Rows coefficients @ basis"""
    if coefficients.shape[0] == 0:
        return np.zeros((0, basis.shape[1]), dtype=np.int64)
    return mat_mul(F, coefficients, basis)


def span_vectors(F: SmallField, basis: np.ndarray) -> np.ndarray:
    """Every vector of the row span, zero first"""
    k, n = basis.shape
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    grid = np.indices((F.order,) * k).reshape(k, -1).T
    return mat_mul(F, grid, basis)


def intersect_coordinate(F: SmallField, U: np.ndarray, i: int) -> np.ndarray:
    """Basis of U meet span(e_1 .. e_i), in the first i coordinates"""
    if U.shape[0] == 0:
        return np.zeros((0, i), dtype=np.int64)
    coefficients = left_nullspace(F, U[:, i:])
    meet = combine(F, coefficients, U)[:, :i]
    return rref(F, meet)[0] if meet.shape[0] else meet


def project_quotient(F: SmallField, U: np.ndarray, i: int) -> np.ndarray:
    """Basis of (U + span(e_1 .. e_i)) / span(e_1 .. e_i), in the last n - i coordinates"""
    image = U[:, i:]
    if image.shape[0] == 0:
        return image
    return rref(F, image)[0]


def embed_complement(F: SmallField, U: np.ndarray, S: np.ndarray) -> np.ndarray:
    """Lift a subspace S of F^(n-k) into the non-pivot coordinates of the k-dimensional RREF subspace U and add U"""
    n = U.shape[1]
    pivots = rref(F, U)[1] if U.shape[0] else []
    free = [c for c in range(n) if c not in pivots]
    lifted = np.zeros((S.shape[0], n), dtype=np.int64)
    lifted[:, free] = S
    return rref(F, np.vstack([U, lifted]))[0]


def is_invertible(F: SmallField, A: np.ndarray) -> bool:
    return rank(F, A) == A.shape[0] == A.shape[1]
