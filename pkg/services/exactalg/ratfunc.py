import logging
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

import sympy
from sympy import Poly

from ..errors import DomainError, NotPolynomialError
from .laurent import LaurentPoly, Scalar

logger = logging.getLogger(__name__)

_SYMBOL = sympy.Symbol('q')


def _split_shift(poly: LaurentPoly) -> Tuple[int, LaurentPoly]:
    """Write poly = var^s * P with P an ordinary polynomial with nonzero constant term"""
    s = poly.valuation()
    return s, poly.shift(-s)


def _to_sympy(poly: LaurentPoly) -> Poly:
    return Poly.from_dict({(e,): c for e, c in poly.items()}, _SYMBOL, domain='ZZ')


def _from_sympy(poly: Poly, var: str) -> LaurentPoly:
    return LaurentPoly({monom[0]: int(coeff) for monom, coeff in poly.terms()}, var)


class RatFunc:
    """Quotient of Laurent polynomials kept in a unique canonical form"""

    __slots__ = ('num', 'den')

    def __init__(self, num: Union[LaurentPoly, int], den: Union[LaurentPoly, int, None] = None, var: str = 'q'):
        if isinstance(num, int):
            num = LaurentPoly.constant(num, var)
        if den is None:
            den = LaurentPoly.one(num.var)
        elif isinstance(den, int):
            den = LaurentPoly.constant(den, num.var)
        if den.is_zero():
            raise DomainError("RatFunc denominator is the zero polynomial")
        self.num, self.den = self._canonical(num, den.with_var(num.var))

    @staticmethod
    def _canonical(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
        var = num.var
        if num.is_zero():
            return LaurentPoly.zero(var), LaurentPoly.one(var)
        num_shift, num_poly = _split_shift(num)
        den_shift, den_poly = _split_shift(den)
        # the net shift lands on whichever side keeps both exponents nonnegative
        shift = num_shift - den_shift
        num_monomial = LaurentPoly.monomial(max(shift, 0), var=var)
        den_monomial = LaurentPoly.monomial(max(-shift, 0), var=var)

        quotient = num_poly.exact_div(den_poly)
        if quotient is not None:
            return quotient * num_monomial, den_monomial

        common = _to_sympy(num_poly).gcd(_to_sympy(den_poly))
        if common.degree() > 0:
            num_poly = _from_sympy(_to_sympy(num_poly).exquo(common), var)
            den_poly = _from_sympy(_to_sympy(den_poly).exquo(common), var)
        if den_poly.leading_coefficient() < 0:
            num_poly, den_poly = -num_poly, -den_poly
        content = gcd(num_poly.content(), den_poly.content())
        if content > 1:
            num_poly, den_poly = num_poly.scale_exact(content), den_poly.scale_exact(content)
        return num_poly * num_monomial, den_poly * den_monomial

    @property
    def var(self) -> str:
        return self.num.var

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_laurent(self) -> bool:
        """den is a unit of the Laurent ring, a bare power of the variable"""
        return len(self.den.terms) == 1 and self.den.leading_coefficient() == 1

    def to_polynomial(self) -> LaurentPoly:
        """The Laurent polynomial num / den; NotPolynomialError unless den is a power of the variable"""
        if not self.is_laurent():
            raise NotPolynomialError(self.den)
        return self.num.shift(-self.den.degree())

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RatFunc(other, var=self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate_at(self, value: Scalar) -> Fraction:
        denominator = self.den.evaluate_at(value)
        if denominator == 0:
            raise DomainError(f"Denominator {self.den} vanishes at {value}")
        return self.num.evaluate_at(value) / denominator

    def invert_var(self) -> "RatFunc":
        return RatFunc(self.num.invert_var(), self.den.invert_var())

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"RatFunc('{self.num}')"
        return f"RatFunc('({self.num})/({self.den})')"


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise DomainError(f"Unknown operation {op}")


def to_polynomial(r: RatFunc) -> LaurentPoly:
    return r.to_polynomial()
