from .compositions import BisectResult, Composition, bisect, composition_of, fiber, phi_table
from .refinements import Refinement, complement_intervals, induced_refinement, refinement_count, refinement_enumerate
from .verification import (
    verify_bisect_properties,
    verify_composition_bijection,
    verify_eq20,
    verify_refinements_induced,
)

__all__ = [
    'Composition',
    'BisectResult',
    'Refinement',
    'composition_of',
    'bisect',
    'fiber',
    'phi_table',
    'refinement_enumerate',
    'refinement_count',
    'induced_refinement',
    'complement_intervals',
    'verify_eq20',
    'verify_composition_bijection',
    'verify_bisect_properties',
    'verify_refinements_induced',
]
