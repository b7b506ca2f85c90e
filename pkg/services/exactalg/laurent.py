from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..errors import DomainError

SUPERSCRIPTS = str.maketrans('0123456789-', '⁰¹²³⁴⁵⁶⁷⁸⁹⁻')
SUBSCRIPTS = str.maketrans('0123456789', '₀₁₂₃₄₅₆₇₈₉')

Scalar = Union[int, Fraction]


class LaurentPoly:
    """Univariate Laurent polynomial with integer coefficients, stored sparsely as exponent -> coefficient"""

    __slots__ = ('_terms', 'var')

    def __init__(self, terms: Optional[Mapping[int, int]] = None, var: str = 'q'):
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        object.__setattr__(self, '_terms', tuple(sorted(cleaned.items())))
        object.__setattr__(self, 'var', var)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return (LaurentPoly, (dict(self._terms), self.var))

    @classmethod
    def zero(cls, var: str = 'q') -> "LaurentPoly":
        return cls({}, var)

    @classmethod
    def one(cls, var: str = 'q') -> "LaurentPoly":
        return cls({0: 1}, var)

    @classmethod
    def constant(cls, value: int, var: str = 'q') -> "LaurentPoly":
        return cls({0: value}, var)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = 'q') -> "LaurentPoly":
        return cls({exponent: coefficient}, var)

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def coefficient(self, exponent: int) -> int:
        return dict(self._terms).get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == ((0, 1),)

    def degree(self) -> int:
        if not self._terms:
            raise DomainError("The zero polynomial has no degree")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise DomainError("The zero polynomial has no valuation")
        return self._terms[0][0]

    def leading_coefficient(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def content(self) -> int:
        return gcd(*(coefficient for _, coefficient in self._terms))

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponent, coefficient in other._terms:
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPoly(terms, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1 or self._terms[0][1] not in (1, -1):
                raise DomainError("Only unit monomials have negative powers")
            exponent, coefficient = self._terms[0]
            return LaurentPoly({exponent * k: coefficient ** (-k)}, self.var)
        result = LaurentPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k"""
        return LaurentPoly({e + k: c for e, c in self._terms}, self.var)

    def scale_exact(self, divisor: int) -> "LaurentPoly":
        """Divide every coefficient by an integer that divides all of them"""
        if divisor == 0 or any(c % divisor for _, c in self._terms):
            raise DomainError(f"{divisor} does not divide every coefficient of {self}")
        return LaurentPoly({e: c // divisor for e, c in self._terms}, self.var)

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly(dict(self._terms), var)

    # substitutions

    def invert_var(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self._terms}, self.var)

    def negate_var(self) -> "LaurentPoly":
        return LaurentPoly({e: (-c if e % 2 else c) for e, c in self._terms}, self.var)

    def power_substitute(self, k: int, var: Optional[str] = None) -> "LaurentPoly":
        if k == 0:
            raise DomainError("power_substitute needs a nonzero integer")
        return LaurentPoly({k * e: c for e, c in self._terms}, var or self.var)

    def evaluate_at(self, value: Scalar) -> Fraction:
        value = Fraction(value)
        if value == 0 and any(e < 0 for e, _ in self._terms):
            raise DomainError("Cannot evaluate a negative power at 0")
        return sum((c * value ** e for e, c in self._terms), Fraction(0))

    def substitute(self, rule: str, k: Optional[int] = None, value: Optional[Scalar] = None, var: Optional[str] = None):
        if rule == 'invert_var':
            return self.invert_var()
        if rule == 'negate_var':
            return self.negate_var()
        if rule == 'power_substitute':
            return self.power_substitute(k, var)
        if rule == 'evaluate_at':
            return self.evaluate_at(value)
        raise DomainError(f"Unknown substitution rule {rule}")

    # exact division by a polynomial

    def divmod_poly(self, divisor: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """Long division of Laurent polynomials from the top degree down; the quotient is exact when the remainder is zero"""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = dict(self._terms)
        quotient: Dict[int, int] = {}
        top_e, top_c = divisor._terms[-1]
        low = self._terms[0][0] if self._terms else 0
        span = top_e - divisor._terms[0][0]
        while remainder:
            exponent = max(remainder)
            if exponent - span < low:
                break
            coefficient = remainder[exponent]
            if coefficient % top_c:
                break
            factor = coefficient // top_c
            shift = exponent - top_e
            quotient[shift] = quotient.get(shift, 0) + factor
            for e, c in divisor._terms:
                key = e + shift
                value = remainder.get(key, 0) - factor * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentPoly(quotient, self.var), LaurentPoly(remainder, self.var)

    def exact_div(self, divisor: "LaurentPoly") -> Optional["LaurentPoly"]:
        quotient, remainder = self.divmod_poly(divisor)
        return quotient if remainder.is_zero() else None

    # serialization

    def to_json(self) -> dict:
        return {'var': self.var, 'terms': [[e, str(c)] for e, c in self._terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data['terms']}, data.get('var', 'q'))

    def render(self, mode: str = 'text', compact: bool = False) -> str:
        """Terms in descending exponent order, e.g. 'q⁸ + q⁴ + q²' or '1 − q⁻²'"""
        if not self._terms:
            return '0'
        plus, minus = ('+', '−') if compact else (' + ', ' − ')
        if mode == 'latex':
            plus, minus = ('+', '-') if compact else (' + ', ' - ')
        parts: List[str] = []
        for exponent, coefficient in reversed(self._terms):
            sign = '' if coefficient > 0 else ('-' if mode == 'latex' else '−')
            if parts:
                sign = plus if coefficient > 0 else minus
            magnitude = abs(coefficient)
            power = _power(self.var, exponent, mode)
            if not power:
                body = str(magnitude)
            elif magnitude == 1:
                body = power
            else:
                body = f"{magnitude}{power}"
            parts.append(sign + body)
        return ''.join(parts)

    def term_count(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.render()}')"


def _power(var: str, exponent: int, mode: str) -> str:
    if exponent == 0:
        return ''
    if exponent == 1:
        return var
    if mode == 'latex':
        return f"{var}^{{{exponent}}}"
    return var + str(exponent).translate(SUPERSCRIPTS)


def laurent_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'neg':
        return -a
    raise DomainError(f"Unknown operation {op}")


def poly_sum(polys: Iterable[LaurentPoly], var: str = 'q') -> LaurentPoly:
    terms: Dict[int, int] = {}
    for poly in polys:
        for exponent, coefficient in poly.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
    return LaurentPoly(terms, var)


def poly_product(polys: Iterable[LaurentPoly], var: str = 'q') -> LaurentPoly:
    result = LaurentPoly.one(var)
    for poly in polys:
        result = result * poly
    return result
