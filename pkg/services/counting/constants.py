"""Sign exponent a and q-exponent b of the functional equation Ig(q, 1/X) = (-1)^a q^b Ig~(1/q, X)."""
from dataclasses import dataclass
from math import comb

from ..exactalg.laurent import LaurentPoly
from .spaces import FormedSpaceSpec


@dataclass(frozen=True)
class FEConstants:
    a: int
    b: int

    def factor(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.b, -1 if self.a % 2 else 1, 'q')


def _layer_sum(spec: FormedSpaceSpec) -> int:
    """(i_2 - i_1) i_1 + ... + (n - i_r) i_r"""
    I = sorted(spec.forms_type) + [spec.n]
    return sum((upper - lower) * lower for lower, upper in zip(I, I[1:]))


def fe_constants(spec: FormedSpaceSpec) -> FEConstants:
    m = spec.m
    if spec.kind == 'symplectic':
        return FEConstants(a=m - 1, b=m * (m - 1) + _layer_sum(spec) // 2)
    if spec.kind == 'unitary':
        b = comb(spec.n, 2) + _layer_sum(spec)
        return FEConstants(a=spec.n - 1 + b, b=b)
    if spec.n % 2:
        return FEConstants(a=m, b=m * (m + 1))
    if spec.epsilon == 1:
        return FEConstants(a=m + 1, b=m * m)
    return FEConstants(a=m, b=m * m)
