import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError
from .fields import SmallField, get_field
from .linalg import (
    combine,
    intersect_coordinate,
    left_nullspace,
    mat_mul,
    project_quotient,
    rank,
    span_vectors,
)

logger = logging.getLogger(__name__)

FORM_KINDS = ('alternating', 'hermitian', 'quadratic', 'symmetric_bilinear')
SPACE_KINDS = {
    'symplectic': 'alternating',
    'unitary': 'hermitian',
    'orthogonal': 'quadratic',
    'symmetric_bilinear': 'symmetric_bilinear',
}


class GramSpace:
    """
    F^n with a form given by its Gram matrix. For the quadratic kind the Gram
    matrix is the polarization B(x, y) = f(x + y) - f(x) - f(y) and quad_diag
    holds f(e_i); f(x) = sum_i f(e_i) x_i^2 + sum_{i<j} B(e_i, e_j) x_i x_j.
    """

    def __init__(self, field: SmallField, n: int, form_kind: str, gram, quad_diag: Optional[Sequence[int]] = None):
        if form_kind not in FORM_KINDS:
            raise DomainError(f"Unknown form kind {form_kind}. Supported kinds: {', '.join(FORM_KINDS)}")
        self.field = field
        self.n = n
        self.form_kind = form_kind
        self.gram = np.asarray(gram, dtype=np.int64).reshape(n, n)
        self.quad_diag = None if quad_diag is None else np.asarray(quad_diag, dtype=np.int64).reshape(n)
        self._validate_form()

    def _validate_form(self) -> None:
        F, G = self.field, self.gram
        if self.form_kind == 'hermitian' and F.involution is None:
            raise DomainError(f"Hermitian forms need a field of order 4 or 9, got {F.order}")
        if self.form_kind == 'alternating':
            ok = np.array_equal(G.T, F.neg[G]) and not np.any(np.diag(G))
        elif self.form_kind == 'hermitian':
            ok = np.array_equal(G, F.conjugate(G.T))
        else:
            ok = np.array_equal(G, G.T)
        if self.form_kind == 'quadratic':
            if self.quad_diag is None:
                raise DomainError("A quadratic space needs the values f(e_i)")
            ok = ok and np.array_equal(np.diag(G), F.add[self.quad_diag, self.quad_diag])
        if not ok:
            raise DomainError(f"Gram matrix does not define a {self.form_kind} form")

    # form evaluation

    def restricted_gram(self, U: np.ndarray) -> np.ndarray:
        """U G sigma(U)^T"""
        F = self.field
        return mat_mul(F, mat_mul(F, U, self.gram), F.conjugate(U).T)

    def pair(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(self.restricted_gram(np.vstack([x, y]))[0, 1])

    def quad_values(self, vectors: np.ndarray) -> np.ndarray:
        """f on every row"""
        F, n = self.field, self.n
        values = np.zeros(vectors.shape[0], dtype=np.int64)
        for i in range(n):
            square = F.mul[vectors[:, i], vectors[:, i]]
            values = F.add[values, F.mul[self.quad_diag[i], square]]
            for j in range(i + 1, n):
                if self.gram[i, j]:
                    values = F.add[values, F.mul[self.gram[i, j], F.mul[vectors[:, i], vectors[:, j]]]]
        return values

    def radical(self, U: np.ndarray) -> np.ndarray:
        """Basis of the radical of the form restricted to the row span of U"""
        coefficients = left_nullspace(self.field, self.restricted_gram(U))
        return combine(self.field, coefficients, U)

    def is_nondegenerate(self, U: np.ndarray) -> bool:
        if U.shape[0] == 0:
            return True
        rad = self.radical(U)
        if rad.shape[0] == 0:
            return True
        if self.form_kind != 'quadratic' or self.field.characteristic != 2:
            return False
        # characteristic 2: f must be anisotropic on the radical of B
        return bool(np.all(self.quad_values(span_vectors(self.field, rad))[1:] != 0))

    def is_nondegenerate_space(self) -> bool:
        return self.is_nondegenerate(np.eye(self.n, dtype=np.int64))

    def transformed(self, P: np.ndarray) -> "GramSpace":
        """The same form written in the basis given by the rows of P"""
        quad = None if self.quad_diag is None else self.quad_values(P)
        return GramSpace(self.field, self.n, self.form_kind, self.restricted_gram(P), quad)

    def subspace_form(self, lo: int, hi: int) -> "GramSpace":
        """The form on the coordinates lo .. hi-1"""
        quad = None if self.quad_diag is None else self.quad_diag[lo:hi]
        return GramSpace(self.field, hi - lo, self.form_kind, self.gram[lo:hi, lo:hi], quad)

    def __repr__(self) -> str:
        return f"GramSpace({self.form_kind}, n={self.n}, q={self.field.order})"


def _hyperbolic_blocks(F: SmallField, planes: int, alternating: bool) -> np.ndarray:
    G = np.zeros((2 * planes, 2 * planes), dtype=np.int64)
    for k in range(planes):
        G[2 * k, 2 * k + 1] = 1
        G[2 * k + 1, 2 * k] = F.neg[1] if alternating else 1
    return G


def _block_diag(*blocks: np.ndarray) -> np.ndarray:
    size = sum(b.shape[0] for b in blocks)
    G = np.zeros((size, size), dtype=np.int64)
    at = 0
    for b in blocks:
        k = b.shape[0]
        G[at:at + k, at:at + k] = b
        at += k
    return G


def _standard_quadratic(F: SmallField, n: int, epsilon: Optional[int]) -> GramSpace:
    """Hyperbolic planes x_{2k} x_{2k+1} plus an anisotropic kernel of dimension 0, 1 or 2"""
    if n % 2:
        if epsilon is not None:
            raise DomainError("epsilon only applies to even-dimensional quadratic spaces")
        planes, kernel = n // 2, 1
    else:
        if epsilon not in (1, -1):
            raise DomainError(f"Even-dimensional quadratic spaces need epsilon = +1 or -1, got {epsilon}")
        planes, kernel = (n // 2, 0) if epsilon == 1 else (n // 2 - 1, 2)
    blocks = [_hyperbolic_blocks(F, planes, alternating=False)]
    quad = [0] * (2 * planes)
    if kernel == 1:
        blocks.append(np.array([[F.add[1, 1]]], dtype=np.int64))
        quad.append(1)
    elif kernel == 2:
        c = F.irreducible_quadratic()
        blocks.append(np.array([[F.add[1, 1], 1], [1, F.add[c, c]]], dtype=np.int64))
        quad.extend([1, c])
    return GramSpace(F, n, 'quadratic', _block_diag(*blocks), quad)


def standard_space(kind: str, n: int, field, epsilon: Optional[int] = None) -> GramSpace:
    """Canonical model of a non-degenerate formed space of the given kind over the field"""
    F = field if isinstance(field, SmallField) else get_field(field)
    if kind not in SPACE_KINDS:
        raise DomainError(f"Unknown space kind {kind}. Supported kinds: {', '.join(SPACE_KINDS)}")
    if n < 1:
        raise DomainError(f"Dimension must be positive, got {n}")
    if kind == 'symplectic':
        if n % 2:
            raise DomainError(f"Symplectic spaces have even dimension, got {n}")
        return GramSpace(F, n, 'alternating', _hyperbolic_blocks(F, n // 2, alternating=True))
    if kind == 'unitary':
        return GramSpace(F, n, 'hermitian', np.eye(n, dtype=np.int64))
    if kind == 'orthogonal':
        return _standard_quadratic(F, n, epsilon)
    return GramSpace(F, n, 'symmetric_bilinear', np.eye(n, dtype=np.int64))


class FlagOfForms:
    """
    Forms B_{i_1}, ..., B_{i_r}, B_n on the coordinate subspaces R_i = span(e_1 .. e_i),
    each with radical the previous member of the flag of radicals.
    """

    def __init__(self, forms: Sequence[GramSpace], forms_type: Iterable[int]):
        self.forms_type: Tuple[int, ...] = tuple(sorted(forms_type))
        self.forms: List[GramSpace] = list(forms)
        self.space = self.forms[-1]
        self.field = self.space.field
        self.n = self.space.n
        self._validate_flag()

    @property
    def radical_flag(self) -> Tuple[int, ...]:
        return self.forms_type

    def _validate_flag(self) -> None:
        dims = self.forms_type + (self.n,)
        if len(self.forms) != len(dims):
            raise DomainError(f"A flag of forms of type {list(self.forms_type)} needs {len(dims)} forms, got {len(self.forms)}")
        previous = 0
        for form, dim in zip(self.forms, dims):
            if form.n != dim or not previous < dim:
                raise DomainError(f"Form of dimension {form.n} does not fit the flag of radicals {list(dims)}")
            rad = form.radical(np.eye(dim, dtype=np.int64))
            expected = np.eye(dim, dtype=np.int64)[:previous]
            if rank(self.field, rad) != previous or rank(self.field, np.vstack([rad, expected])) != previous:
                raise DomainError(f"The form on R_{dim} does not have radical R_{previous}")
            previous = dim

    def restrict(self, rho: int) -> "FlagOfForms":
        """(B_{i_1}, ..., B_{i_rho}) on R_{i_rho}"""
        return FlagOfForms(self.forms[:rho], self.forms_type[:rho - 1])

    def quotient(self, rho: int) -> "FlagOfForms":
        """The induced forms on R_{i_k} / R_{i_rho} for k > rho"""
        cut = self.forms_type[rho - 1]
        forms = [form.subspace_form(cut, form.n) for form in self.forms[rho:]]
        return FlagOfForms(forms, [i - cut for i in self.forms_type[rho:]])

    def is_nondegenerate(self, U: np.ndarray) -> bool:
        if not self.forms_type:
            return self.space.is_nondegenerate(U)
        for rho, cut in enumerate(self.forms_type, start=1):
            if not self.restrict(rho).is_nondegenerate(intersect_coordinate(self.field, U, cut)):
                return False
            if not self.quotient(rho).is_nondegenerate(project_quotient(self.field, U, cut)):
                return False
        return True

    def __repr__(self) -> str:
        return f"FlagOfForms({self.space.form_kind}, n={self.n}, I={list(self.forms_type)}, q={self.field.order})"


def standard_flag_of_forms(n: int, forms_type: Iterable[int], kind: str, field) -> FlagOfForms:
    """Stack a standard non-degenerate form of dimension i_rho - i_{rho-1} on each layer"""
    F = field if isinstance(field, SmallField) else get_field(field)
    if kind not in ('symplectic', 'unitary'):
        raise DomainError(f"Flags of forms are symplectic or unitary, got {kind}")
    I = sorted(set(forms_type))
    if any(not 1 <= i <= n - 1 for i in I):
        raise DomainError(f"Forms type {I} is not a subset of [{n - 1}]")
    dims = I + [n]
    forms, previous = [], 0
    for dim in dims:
        layer = standard_space(kind, dim - previous, F)
        gram = _block_diag(np.zeros((previous, previous), dtype=np.int64), layer.gram)
        forms.append(GramSpace(F, dim, layer.form_kind, gram))
        previous = dim
    return FlagOfForms(forms, I)
