import logging
from functools import partial
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..base_service import BaseService
from ..compositions.compositions import fiber
from ..coxeter.accumulate import descent_accumulate, merge_buckets, zeta_transform
from ..coxeter.chessboard import chessboard_counts, chessboard_size, row_to_poly, zeta_transform_array
from ..coxeter.permutation import GenSet, Permutation, length, parabolic_length, permutation_stream
from ..errors import ConsistencyError, DomainError
from ..exactalg.igusa import IgusaFunction, igusa_from_F_coeffs
from ..exactalg.laurent import LaurentPoly
from .orthogonal import a_orthogonal, alpha_orthogonal_prop3, validate_orthogonal
from .spaces import FormedSpaceSpec
from .symplectic_unitary import a_recursive_sp_u, alpha_base_sp_u, coxeter_complement, normalize

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
AlphaTable = Dict[Subset, Tuple[LaurentPoly, LaurentPoly]]

METHODS = ('closed', 'coxeter', 'recursive', 'cross')
COXETER_CHUNK = 5040
CONJECTURE_MAX_N = 13


def coxeter_statistic(w: Permutation, complement: Subset) -> int:
    """l(w) + l_L^K(w)"""
    return length(w) + parabolic_length(w, complement, 'left')


def _coxeter_chunk(task: Tuple[int, Subset, int, int]) -> Dict[Subset, LaurentPoly]:
    rank, complement, start, stop = task
    return descent_accumulate(
        permutation_stream(rank, start, stop),
        partial(coxeter_statistic, complement=complement),
        var='Y',
    )


class CountingService(BaseService):
    """Every path to the flag counts a^J and their normalizations alpha^J, with cached sweeps"""

    service_name = 'counting'

    # group sweeps

    def _coxeter_sums(self, spec: FormedSpaceSpec) -> Dict[Subset, LaurentPoly]:
        rank = spec.gamma_n
        self.check_bound('coxeter_rank', rank)
        self.check_bound('group_size', factorial(rank))

        def compute() -> Dict[Subset, LaurentPoly]:
            complement = coxeter_complement(spec)
            total = factorial(rank)
            tasks = [(rank, complement, start, min(start + COXETER_CHUNK, total)) for start in range(0, total, COXETER_CHUNK)]
            self.log_run('coxeter_sweep', 'started', {'spec': str(spec), 'elements': total})
            buckets = merge_buckets(self.map_chunks(_coxeter_chunk, tasks, desc=f"S_{rank}"), 'Y')
            return zeta_transform(buckets, range(1, rank), 'Y')

        return self.cached(f"coxeter_{spec.key()}", compute)

    def alpha_coxeter(self, spec: FormedSpaceSpec, J: Iterable[int]) -> LaurentPoly:
        """sum over w in S_{gamma n} with D_L(w) in gamma J of Y^(l(w) + l_L^K(w))"""
        if spec.kind == 'orthogonal':
            raise DomainError("alpha_coxeter applies to symplectic and unitary spaces")
        J = spec.validate_flag_type(J)
        if spec.is_vacuous(J):
            return LaurentPoly.zero('q')
        try:
            sums = self._coxeter_sums(spec)
        except Exception as e:
            logger.error(f"Error in alpha_coxeter: {str(e)}")
            raise
        return spec.from_Y(sums[spec.scaled(J)])

    def _chessboard_sums(self, n: int, epsilon: int) -> np.ndarray:
        if n > CONJECTURE_MAX_N:
            raise DomainError(f"The chessboard sweep is supported up to n = {CONJECTURE_MAX_N}, got {n}")
        self.check_bound('group_size', chessboard_size(n))

        def compute() -> np.ndarray:
            self.log_run('chessboard_sweep', 'started', {'n': n, 'epsilon': epsilon, 'elements': chessboard_size(n)})
            return zeta_transform_array(chessboard_counts(n, epsilon, mapper=self.map_chunks))

        return self.cached(f"chessboard_{n}_{epsilon}", compute)

    def conjecture_alpha(self, n: int, epsilon: Optional[int], J: Iterable[int]) -> LaurentPoly:
        """sum over chessboard w with D_L(w) in J of chi_eps(w) q^-L(w)"""
        validate_orthogonal(n, epsilon)
        J = GenSet(n).validate(J)
        # the swap coset, the only place epsilon enters, exists for even n only
        sums = self._chessboard_sums(n, epsilon if n % 2 == 0 else 1)
        return row_to_poly(sums[GenSet.to_mask(J)], 'Y').invert_var().with_var('q')

    # formula paths

    def a_recursive(self, spec: FormedSpaceSpec, J: Iterable[int]) -> LaurentPoly:
        if spec.kind == 'orthogonal':
            return a_orthogonal(spec.n, spec.epsilon, J)
        return a_recursive_sp_u(spec, J)

    def alpha_closed(self, spec: FormedSpaceSpec, J: Iterable[int]) -> LaurentPoly:
        if spec.kind == 'orthogonal':
            return alpha_orthogonal_prop3(spec.n, spec.epsilon, J)
        if not spec.forms_type:
            return alpha_base_sp_u(spec, J)
        return normalize(a_recursive_sp_u(spec, J))

    def alpha(self, spec: FormedSpaceSpec, J: Iterable[int], method: str = 'closed') -> LaurentPoly:
        J = spec.validate_flag_type(J)
        if method == 'closed':
            return self.alpha_closed(spec, J)
        if method == 'recursive':
            return normalize(self.a_recursive(spec, J))
        if method == 'coxeter':
            if spec.kind == 'orthogonal':
                return self.conjecture_alpha(spec.n, spec.epsilon, J)
            return self.alpha_coxeter(spec, J)
        if method == 'cross':
            values = {name: self.alpha(spec, J, name) for name in ('closed', 'recursive', 'coxeter')}
            if len(set(values.values())) != 1:
                logger.error(f"Error in alpha: paths disagree for {spec} J={sorted(J)}: {values}")
                raise ConsistencyError(f"Computation paths disagree for {spec} J={sorted(J)}: {values}")
            return values['closed']
        raise DomainError(f"Unknown method {method}. Supported methods: {', '.join(METHODS)}")

    def alpha_table(self, spec: FormedSpaceSpec, method: str = 'closed', flag_types: Optional[List[Subset]] = None) -> AlphaTable:
        """J -> (a^J, alpha^J) over the flag types of the space"""
        table: AlphaTable = {}
        for J in flag_types or spec.flag_types():
            table[J] = (self.a_recursive(spec, J), self.alpha(spec, J, method))
        return table

    def alpha_lifted(self, n: int, epsilon: Optional[int], G: Iterable[int], check_fiber: bool = False) -> LaurentPoly:
        """alpha^J for the lexicographically least J with phi(J) = G"""
        members = fiber(G, n)
        if not members:
            raise ConsistencyError(f"Empty fiber over {sorted(G)} for n = {n}")
        alpha = alpha_orthogonal_prop3(n, epsilon, members[0])
        if check_fiber:
            for J in members[1:]:
                other = alpha_orthogonal_prop3(n, epsilon, J)
                if other != alpha:
                    logger.error(f"Error in alpha_lifted: {sorted(J)} gives {other}, expected {alpha}")
                    raise ConsistencyError(f"alpha is not constant on the fiber over {sorted(G)}")
        return alpha

    def igusa_function(self, spec: FormedSpaceSpec, method: str = 'closed') -> IgusaFunction:
        """sum_J alpha^J(1/q) F_J(X) over the flag types; symplectic slots are relabeled J -> J/2"""
        coeffs = {
            spec.variable_index(J): self.alpha(spec, J, method)
            for J in spec.flag_types()
        }
        return igusa_from_F_coeffs(spec.n_vars + 1, coeffs, 'q')
