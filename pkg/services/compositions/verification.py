import logging
from collections import defaultdict
from typing import DefaultDict, Set, Tuple

from ..exactalg.igusa import subsets_of
from ..reports import Failure, Report
from .compositions import bisect, composition_of, phi_table
from .refinements import induced_refinement, refinement_enumerate

logger = logging.getLogger(__name__)


def verify_composition_bijection(n: int) -> Report:
    report = Report(claim=f"composition bijection n={n}")
    seen = set()
    for J in subsets_of(range(1, n)):
        composition, N, norm = composition_of(J, n)
        ok = N == n and composition.total == n and norm == len(J) + 1 and composition.parts not in seen
        seen.add(composition.parts)
        report.check(ok, Failure(J=sorted(J), context={'parts': list(composition.parts)}))
    # 2^(n-1) compositions of n
    report.check(len(seen) == 2 ** (n - 1), Failure(context={'distinct': len(seen)}))
    return report


def verify_bisect_properties(n: int) -> Report:
    """N(phi(I)) = cut(I), ||phi(I)|| <= ||I||, phi0 below the cut, and phi onto the subsets of [m]"""
    report = Report(claim=f"bisect properties n={n}")
    m = n // 2
    table = phi_table(n)
    for I, phi in table.items():
        result = bisect(I, n)
        _, N, norm = composition_of(phi, m)
        _, _, norm_I = composition_of(I, n)
        ok = (
            N == result.cut
            and norm <= norm_I
            and all(1 <= x <= result.cut - 1 for x in result.phi0)
            and phi == result.phi0 | frozenset(range(result.cut + 1, m + 1))
        )
        report.check(ok, Failure(J=sorted(I), context={'phi': sorted(phi), 'cut': result.cut}))
    image = set(table.values())
    for H in subsets_of(range(1, m + 1)):
        report.check(H in image, Failure(J=sorted(H), context={'surjective': False}))
    return report


def verify_eq20(n: int) -> Report:
    """
    For every I, every H and every refinement xi of a truncation of C(phi(I))
    by C(H): (-1)^(n-1+||H||) times the sum of (-1)^|J| over J >= I with
    phi(J) = H and xi(I, J) = xi equals 1.
    """
    report = Report(claim=f"eq20 n={n}")
    m = n // 2
    table = phi_table(n)
    every_H = subsets_of(range(1, m + 1))
    for I, G in table.items():
        buckets: DefaultDict[Tuple, int] = defaultdict(int)
        for J, H in table.items():
            if I <= J:
                buckets[H, induced_refinement(I, J, n).xi] += -1 if len(J) % 2 else 1
        for H in every_H:
            refinements = refinement_enumerate(G, H, m)
            if not refinements:
                report.skip()
                continue
            _, _, norm_H = composition_of(H, m)
            sign = -1 if (n - 1 + norm_H) % 2 else 1
            for refinement in refinements:
                value = sign * buckets.get((H, refinement.xi), 0)
                report.check(value == 1, Failure(J=sorted(I), context={'H': sorted(H), 'xi': list(refinement.xi), 'value': value}))
    return report


def verify_refinements_induced(n: int) -> Report:
    """Every refinement of a truncation of C(G) by C(H) arises as xi(I, J) with phi(I) = G and phi(J) = H"""
    report = Report(claim=f"refinements induced n={n}")
    m = n // 2
    table = phi_table(n)
    induced: Set[Tuple] = set()
    for I, G in table.items():
        for J, H in table.items():
            if I <= J:
                refinement = induced_refinement(I, J, n)
                coarse, _, _ = composition_of(G, m)
                fine, _, _ = composition_of(H, m)
                report.check(refinement.refines(coarse, fine), Failure(J=sorted(J), context={'I': sorted(I), 'xi': list(refinement.xi)}))
                induced.add((G, H, refinement.xi))
    every = subsets_of(range(1, m + 1))
    for G in every:
        for H in every:
            for refinement in refinement_enumerate(G, H, m):
                report.check(
                    (G, H, refinement.xi) in induced,
                    Failure(J=sorted(H), context={'G': sorted(G), 'xi': list(refinement.xi)}),
                )
    return report
