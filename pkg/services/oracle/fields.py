"""
Table-driven finite fields of order 2, 3, 4, 5, 7 and 9.

Elements are the integers 0 .. order-1. For the degree-2 fields an
element a + b*x is stored as a + p*b, with F4 = F2[x]/(x^2+x+1) and
F9 = F3[x]/(x^2+1). Every operation is a lookup in a numpy table, so
the tables also act elementwise on integer arrays.
"""
import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Optional, Tuple

import numpy as np

from ..errors import ConsistencyError, DomainError

logger = logging.getLogger(__name__)

# order -> (characteristic, degree, (c0, c1) with x^2 = c1*x + c0)
FIELD_ORDERS: Dict[int, Tuple[int, int, Optional[Tuple[int, int]]]] = {
    2: (2, 1, None),
    3: (3, 1, None),
    4: (2, 2, (1, 1)),
    5: (5, 1, None),
    7: (7, 1, None),
    9: (3, 2, (2, 0)),
}


class SmallField:
    def __init__(self, order: int):
        if order not in FIELD_ORDERS:
            raise DomainError(f"Unsupported field order {order}. Supported orders: {', '.join(map(str, FIELD_ORDERS))}")
        self.order = order
        self.characteristic, self.degree, modulus = FIELD_ORDERS[order]
        p = self.characteristic
        add = np.zeros((order, order), dtype=np.int64)
        mul = np.zeros((order, order), dtype=np.int64)
        for x, y in product(range(order), repeat=2):
            (a0, a1), (b0, b1) = divmod(x, p)[::-1], divmod(y, p)[::-1]
            add[x, y] = (a0 + b0) % p + p * ((a1 + b1) % p)
            if modulus is None:
                mul[x, y] = (x * y) % p
            else:
                c0, c1 = modulus
                top = a1 * b1
                low = (a0 * b0 + top * c0) % p
                high = (a0 * b1 + a1 * b0 + top * c1) % p
                mul[x, y] = low + p * high
        self.add = add
        self.mul = mul
        self.neg = np.array([int(np.where(add[x] == 0)[0][0]) for x in range(order)], dtype=np.int64)
        self.inv = np.zeros(order, dtype=np.int64)
        for x in range(1, order):
            self.inv[x] = int(np.where(mul[x] == 1)[0][0])
        self.frobenius = np.array([self.power(x, p) for x in range(order)], dtype=np.int64)
        # x -> x^sqrt(order) on the quadratic extensions
        self.involution = self.frobenius if self.degree == 2 else None
        self._check_axioms()

    @property
    def base_order(self) -> int:
        """q with the field of order q^2 (hermitian forms) or q itself"""
        return self.characteristic if self.degree == 2 else self.order

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def power(self, x: int, k: int) -> int:
        result = 1
        for _ in range(k):
            result = int(self.mul[result, x])
        return result

    def sub(self, x, y):
        return self.add[x, self.neg[y]]

    def conjugate(self, values: np.ndarray) -> np.ndarray:
        if self.involution is None:
            return values
        return self.involution[values]

    def irreducible_quadratic(self) -> int:
        """Some c with t^2 + t + c irreducible, giving the anisotropic plane x^2 + xy + c y^2"""
        for c in self.elements():
            if all(self.add[self.add[self.mul[t, t], t], c] != 0 for t in self.elements()):
                return c
        raise ConsistencyError(f"No irreducible t^2 + t + c over the field of order {self.order}")

    def _check_axioms(self) -> None:
        q = range(self.order)
        add, mul = self.add, self.mul
        ok = all(add[x, 0] == x and mul[x, 1] == x for x in q)
        ok = ok and all(mul[x, self.inv[x]] == 1 for x in self.nonzero())
        for x, y in product(q, repeat=2):
            ok = ok and add[x, y] == add[y, x] and mul[x, y] == mul[y, x]
        for x, y, z in product(q, repeat=3):
            ok = ok and add[add[x, y], z] == add[x, add[y, z]]
            ok = ok and mul[mul[x, y], z] == mul[x, mul[y, z]]
            ok = ok and mul[x, add[y, z]] == add[mul[x, y], mul[x, z]]
        if self.involution is not None:
            fixed = [x for x in q if self.involution[x] == x]
            ok = ok and len(fixed) == self.characteristic
            ok = ok and all(self.involution[self.involution[x]] == x for x in q)
            ok = ok and all(self.involution[mul[x, y]] == mul[self.involution[x], self.involution[y]] for x, y in product(q, repeat=2))
        if not ok:
            logger.error(f"Error in SmallField: tables of order {self.order} violate the field axioms")
            raise ConsistencyError(f"Field tables of order {self.order} violate the field axioms")

    def __repr__(self) -> str:
        return f"SmallField({self.order})"


@lru_cache(maxsize=None)
def get_field(order: int) -> SmallField:
    return SmallField(order)
