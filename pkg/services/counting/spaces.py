import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional

from ..errors import DomainError
from ..exactalg.igusa import subsets_of
from ..exactalg.laurent import LaurentPoly

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
KINDS = ('symplectic', 'unitary', 'orthogonal')


@dataclass(frozen=True)
class FormedSpaceSpec:
    """Geometric kind, dimension, sign and flag-of-forms type of a formed space"""
    kind: str
    n: int
    epsilon: Optional[int] = None
    forms_type: Subset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'forms_type', frozenset(self.forms_type))
        self._validate_kind()
        self._validate_epsilon()
        self._validate_forms_type()

    def _validate_kind(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"Unknown kind {self.kind}. Supported kinds: {', '.join(KINDS)}")
        if self.n < 1:
            raise DomainError(f"Dimension must be positive, got {self.n}")
        if self.kind == 'symplectic' and self.n % 2:
            raise DomainError(f"Symplectic spaces have even dimension, got {self.n}")

    def _validate_epsilon(self) -> None:
        needs_epsilon = self.kind == 'orthogonal' and self.n % 2 == 0
        if needs_epsilon and self.epsilon not in (1, -1):
            raise DomainError(f"Even-dimensional orthogonal spaces need epsilon = +1 or -1, got {self.epsilon}")
        if not needs_epsilon and self.epsilon is not None:
            raise DomainError(f"epsilon only applies to even-dimensional orthogonal spaces, got {self.epsilon}")

    def _validate_forms_type(self) -> None:
        I = self.forms_type
        if not I <= frozenset(range(1, self.n)):
            raise DomainError(f"Forms type {sorted(I)} is not a subset of [{self.n - 1}]")
        if I and self.kind == 'orthogonal':
            raise DomainError("Flags of forms are only supported for symplectic and unitary spaces")
        if self.kind == 'symplectic' and any(i % 2 for i in I):
            raise DomainError(f"Symplectic forms types consist of even numbers, got {sorted(I)}")

    @property
    def gamma(self) -> Fraction:
        return Fraction(1) if self.kind == 'unitary' else Fraction(1, 2)

    @property
    def two_gamma(self) -> int:
        return 2 if self.kind == 'unitary' else 1

    @property
    def gamma_n(self) -> int:
        return self.n if self.kind == 'unitary' else self.n // 2

    @property
    def m(self) -> int:
        return self.n // 2

    def scaled(self, J: Iterable[int]) -> Subset:
        """gamma * J"""
        if self.kind == 'unitary':
            return frozenset(J)
        return frozenset(j // 2 for j in J)

    def dual(self) -> "FormedSpaceSpec":
        """The same space with forms type {n - i : i in I}"""
        return FormedSpaceSpec(self.kind, self.n, self.epsilon, frozenset(self.n - i for i in self.forms_type))

    def validate_flag_type(self, J: Iterable[int]) -> Subset:
        J = frozenset(J)
        if not J <= frozenset(range(1, self.n)):
            raise DomainError(f"Flag type {sorted(J)} is not a subset of [{self.n - 1}]")
        return J

    def is_vacuous(self, J: Iterable[int]) -> bool:
        """Symplectic flags only have even dimensions"""
        return self.kind == 'symplectic' and any(j % 2 for j in J)

    def flag_types(self) -> List[Subset]:
        """All J of [n-1], only the even ones for symplectic spaces"""
        ground = range(2, self.n, 2) if self.kind == 'symplectic' else range(1, self.n)
        return subsets_of(ground)

    def variable_index(self, J: Iterable[int]) -> Subset:
        """Index set of the Igusa variables: symplectic slots are relabeled J -> J/2"""
        return self.scaled(J) if self.kind == 'symplectic' else frozenset(J)

    @property
    def n_vars(self) -> int:
        return self.m - 1 if self.kind == 'symplectic' else self.n - 1

    def from_Y(self, poly: LaurentPoly) -> LaurentPoly:
        """Substitute Y = q^-2 (symplectic, orthogonal) or Y = -1/q (unitary)"""
        if self.kind == 'unitary':
            return poly.negate_var().invert_var().with_var('q')
        return poly.power_substitute(-2, 'q')

    def key(self) -> str:
        I = ','.join(str(i) for i in sorted(self.forms_type))
        return f"{self.kind}:{self.n}:{self.epsilon}:{I}"

    def __str__(self) -> str:
        parts = [self.kind, f"n={self.n}"]
        if self.epsilon is not None:
            parts.append(f"eps={self.epsilon:+d}")
        if self.forms_type:
            parts.append(f"I={sorted(self.forms_type)}")
        return ' '.join(parts)
