import json
import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from ..errors import DomainError
from .laurent import SUBSCRIPTS, LaurentPoly

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Monomial = Tuple[int, ...]


def subsets_of(ground: Iterable[int]) -> List[Subset]:
    """All subsets of a finite set, ordered by size then lexicographically"""
    ground = sorted(ground)
    return [frozenset(c) for size in range(len(ground) + 1) for c in combinations(ground, size)]


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


class IgusaFunction:
    """
    Igusa-type rational function in X_1..X_{n_vars} stored on the basis
    e_K = prod_{k in K} 1/(1 - X_k); coefficients are Laurent polynomials in
    the base variable.
    """

    __slots__ = ('n_vars', 'var', '_coeffs')

    def __init__(self, n_vars: int, coeffs: Mapping[Iterable[int], LaurentPoly], var: str = 'q'):
        self.n_vars = n_vars
        self.var = var
        cleaned: Dict[Subset, LaurentPoly] = {}
        for K, poly in coeffs.items():
            K = frozenset(K)
            if any(k < 1 or k > n_vars for k in K):
                raise DomainError(f"Basis index {sorted(K)} outside [{n_vars}]")
            total = cleaned.get(K, LaurentPoly.zero(var)) + poly.with_var(var)
            if total.is_zero():
                cleaned.pop(K, None)
            else:
                cleaned[K] = total
        self._coeffs = cleaned

    @property
    def coeffs(self) -> Dict[Subset, LaurentPoly]:
        return dict(self._coeffs)

    def coefficient(self, K: Iterable[int]) -> LaurentPoly:
        return self._coeffs.get(frozenset(K), LaurentPoly.zero(self.var))

    def _same_shape(self, other: "IgusaFunction") -> None:
        if self.n_vars != other.n_vars:
            raise DomainError(f"Igusa functions in {self.n_vars} and {other.n_vars} variables")

    def __add__(self, other: "IgusaFunction") -> "IgusaFunction":
        self._same_shape(other)
        merged = dict(self._coeffs)
        for K, poly in other._coeffs.items():
            merged[K] = merged.get(K, LaurentPoly.zero(self.var)) + poly
        return IgusaFunction(self.n_vars, merged, self.var)

    def __neg__(self) -> "IgusaFunction":
        return self.scale(LaurentPoly.constant(-1, self.var))

    def __sub__(self, other: "IgusaFunction") -> "IgusaFunction":
        return self + (-other)

    def scale(self, factor: LaurentPoly) -> "IgusaFunction":
        return IgusaFunction(self.n_vars, {K: poly * factor for K, poly in self._coeffs.items()}, self.var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IgusaFunction):
            return NotImplemented
        return self.n_vars == other.n_vars and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self._coeffs.items())))

    def invert_vars(self) -> "IgusaFunction":
        """X_k -> 1/X_k, i.e. e_K -> sum_{K' <= K} (-1)^{|K'|} e_{K'}"""
        result: Dict[Subset, LaurentPoly] = {}
        for K, poly in self._coeffs.items():
            for K_sub in subsets_of(K):
                term = poly if len(K_sub) % 2 == 0 else -poly
                result[K_sub] = result.get(K_sub, LaurentPoly.zero(self.var)) + term
        return IgusaFunction(self.n_vars, result, self.var)

    def invert_base(self) -> "IgusaFunction":
        return IgusaFunction(self.n_vars, {K: poly.invert_var() for K, poly in self._coeffs.items()}, self.var)

    def F_coefficients(self) -> Dict[Subset, LaurentPoly]:
        """Coordinates on the F-basis: e_K = sum_{J <= K} F_J"""
        result: Dict[Subset, LaurentPoly] = {}
        for K, poly in self._coeffs.items():
            for J in subsets_of(K):
                result[J] = result.get(J, LaurentPoly.zero(self.var)) + poly
        return {J: poly for J, poly in result.items() if not poly.is_zero()}

    # rendering

    def numerator(self) -> Tuple[List[int], Dict[Monomial, LaurentPoly]]:
        """Reduced display: (D, numerator) with the value equal to numerator / prod_{j in D}(1 - X_j)"""
        n = self.n_vars
        D = list(range(1, n + 1))
        numerator: Dict[Monomial, LaurentPoly] = {}
        for K, poly in self._coeffs.items():
            outside = [j for j in D if j not in K]
            for chosen in subsets_of(outside):
                exponent = tuple(1 if j in chosen else 0 for j in range(1, n + 1))
                term = poly if len(chosen) % 2 == 0 else -poly
                numerator[exponent] = numerator.get(exponent, LaurentPoly.zero(self.var)) + term
        numerator = {m: p for m, p in numerator.items() if not p.is_zero()}
        for j in range(1, n + 1):
            if numerator and _vanishes_at_one(numerator, j - 1):
                numerator = _divide_one_minus(numerator, j - 1, self.var)
                D.remove(j)
        return D, numerator

    def render(self, fmt: str = 'text') -> str:
        if fmt == 'json':
            return json.dumps(self.to_json(), sort_keys=True)
        D, numerator = self.numerator()
        latex = fmt == 'latex'
        monomials = sorted(numerator, key=lambda m: (sum(m), [-e for e in m]))
        parts: List[str] = []
        for monomial in monomials:
            parts.append(_render_term(numerator[monomial], monomial, first=not parts, latex=latex))
        top = ''.join(parts) if parts else '0'
        if not D:
            return top
        if latex:
            den = ''.join(f"(1 - X_{{{j}}})" for j in D)
            return f"\\frac{{{top}}}{{{den}}}"
        den = ''.join(f"(1−X{str(j).translate(SUBSCRIPTS)})" for j in D)
        if len(D) > 1:
            den = f"({den})"
        if len(parts) > 1:
            top = f"({top})"
        return f"{top}/{den}"

    def to_json(self) -> dict:
        ordered = sorted(self._coeffs, key=lambda K: sorted(K))
        return {
            'n_vars': self.n_vars,
            'basis': 'e',
            'coeffs': [{'K': sorted(K), 'poly': self._coeffs[K].to_json()} for K in ordered],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "IgusaFunction":
        coeffs = {frozenset(entry['K']): LaurentPoly.from_json(entry['poly']) for entry in data['coeffs']}
        var = data['coeffs'][0]['poly']['var'] if data['coeffs'] else 'q'
        return cls(data['n_vars'], coeffs, var)

    def __repr__(self) -> str:
        return f"IgusaFunction('{self.render()}')"


def _vanishes_at_one(numerator: Dict[Monomial, LaurentPoly], index: int) -> bool:
    collapsed: Dict[Monomial, LaurentPoly] = {}
    for monomial, poly in numerator.items():
        rest = monomial[:index] + (0,) + monomial[index + 1:]
        collapsed[rest] = collapsed.get(rest, LaurentPoly.zero(poly.var)) + poly
    return all(poly.is_zero() for poly in collapsed.values())


def _divide_one_minus(numerator: Dict[Monomial, LaurentPoly], index: int, var: str) -> Dict[Monomial, LaurentPoly]:
    """Exact quotient by (1 - X_index): Q_k = P_0 + ... + P_k along the X_index exponent"""
    columns: Dict[Monomial, Dict[int, LaurentPoly]] = {}
    for monomial, poly in numerator.items():
        rest = monomial[:index] + (0,) + monomial[index + 1:]
        columns.setdefault(rest, {})[monomial[index]] = poly
    quotient: Dict[Monomial, LaurentPoly] = {}
    for rest, column in columns.items():
        running = LaurentPoly.zero(var)
        for k in range(max(column)):
            running = running + column.get(k, LaurentPoly.zero(var))
            if not running.is_zero():
                quotient[rest[:index] + (k,) + rest[index + 1:]] = running
    return quotient


def _render_term(poly: LaurentPoly, monomial: Monomial, first: bool, latex: bool) -> str:
    if latex:
        x_part = ' '.join(f"X_{{{i + 1}}}" for i, e in enumerate(monomial) for _ in range(e))
    else:
        x_part = ''.join(f"X{str(i + 1).translate(SUBSCRIPTS)}" for i, e in enumerate(monomial) for _ in range(e))
    minus = '-' if latex else '−'
    if poly.term_count() == 1:
        (exponent, coefficient), = poly.items()
        negative = coefficient < 0
        magnitude = LaurentPoly({exponent: abs(coefficient)}, poly.var)
        body = magnitude.render('latex' if latex else 'text')
        if x_part and body == '1':
            body = ''
        elif x_part and latex:
            body += ' '
    else:
        negative = False
        body = f"({poly.render('latex' if latex else 'text', compact=True)})"
    text = body + x_part
    if first:
        return (minus if negative else '') + text
    return (f" {minus} " if negative else ' + ') + text


def igusa_from_F_coeffs(n: int, coeffs: Mapping[Iterable[int], LaurentPoly], var: str = 'q') -> IgusaFunction:
    """sum_J coeffs[J] F_J over J <= [n-1], with F_J = sum_{K <= J} (-1)^{|J - K|} e_K"""
    n_vars = max(n - 1, 0)
    expanded: Dict[Subset, LaurentPoly] = {}
    for J, poly in coeffs.items():
        J = frozenset(J)
        if poly.is_zero():
            continue
        for K in subsets_of(J):
            term = poly if _sign(len(J) - len(K)) > 0 else -poly
            expanded[K] = expanded.get(K, LaurentPoly.zero(var)) + term.with_var(var)
    return IgusaFunction(n_vars, expanded, var)


def igusa_invert_vars(f: IgusaFunction) -> IgusaFunction:
    return f.invert_vars()


def igusa_invert_base(f: IgusaFunction) -> IgusaFunction:
    return f.invert_base()


def igusa_render(f: IgusaFunction, fmt: str = 'text') -> str:
    return f.render(fmt)
