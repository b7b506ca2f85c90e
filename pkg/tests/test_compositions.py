import pytest

from services.compositions import (
    Composition,
    Refinement,
    bisect,
    complement_intervals,
    composition_of,
    fiber,
    induced_refinement,
    phi_table,
    refinement_count,
    refinement_enumerate,
    verify_bisect_properties,
    verify_composition_bijection,
    verify_eq20,
    verify_refinements_induced,
)
from services.config import SettingsManager
from services.errors import DomainError, ResourceBoundError


@pytest.mark.parametrize('I, n, parts, N, norm', [
    ({1, 3, 4}, 5, (1, 2, 1, 1), 5, 4),
    ({2, 4, 5}, 5, (2, 1), 3, 2),
    (set(), 4, (4,), 4, 1),
    ({1, 2, 3}, 3, (), 0, 0),
])
def test_composition_of(I, n, parts, N, norm):
    composition, got_N, got_norm = composition_of(I, n)
    assert composition == Composition(parts)
    assert (got_N, got_norm) == (N, norm)


def test_composition_rejects_foreign_members():
    with pytest.raises(DomainError):
        composition_of({6}, 5)


@pytest.mark.parametrize('J, n, phi, cut', [
    ({2, 7, 9}, 11, {1, 3, 4}, 5),
    ({1, 2, 7, 8, 9}, 11, {2, 4, 5}, 3),
    ({1, 2, 3, 7, 9, 10}, 11, {2, 4, 5}, 3),
    (set(), 4, set(), 2),
])
def test_bisect(J, n, phi, cut):
    result = bisect(J, n)
    assert result.phi == phi
    assert result.cut == cut


def test_fiber_members():
    assert frozenset({2, 7, 9}) in fiber({1, 3, 4}, 11)
    members = fiber({2, 4, 5}, 11)
    assert frozenset({1, 2, 7, 8, 9}) in members
    assert frozenset({1, 2, 3, 7, 9, 10}) in members
    assert members == sorted(members, key=sorted)


def test_small_fibers():
    assert fiber({1}, 3) == [frozenset({1, 2})]
    assert fiber({1}, 4) == [frozenset({2})]


@pytest.mark.parametrize('n', [5, 6])
def test_fibers_partition(n):
    table = phi_table(n)
    assert len(table) == 2 ** (n - 1)
    total = sum(len(fiber(H, n)) for H in {frozenset(phi) for phi in table.values()})
    assert total == 2 ** (n - 1)


def test_fiber_bound():
    SettingsManager().override(max_fiber_n=5)
    with pytest.raises(ResourceBoundError):
        fiber(set(), 6)


def test_refinement_enumerate():
    refinements = refinement_enumerate({1, 3, 4}, {2, 4, 5}, 5)
    assert [r.xi for r in refinements] == [(0, 1, 1, 2), (0, 1, 2, 2)]
    assert refinement_count({1, 3, 4}, {2, 4, 5}, 5) == 2


def test_no_refinement_of_the_empty_composition():
    assert refinement_count({1, 2, 3, 4, 5}, set(), 5) == 0


def test_refinement_validation():
    with pytest.raises(DomainError):
        Refinement((2, 1))


@pytest.mark.parametrize('I, J, xi', [
    ({2, 7, 9}, {1, 2, 7, 8, 9}, (0, 1, 1, 2)),
    ({2, 7, 9}, {1, 2, 3, 7, 9, 10}, (0, 1, 2, 2)),
])
def test_induced_refinement(I, J, xi):
    assert induced_refinement(I, J, 11).xi == xi


def test_induced_refinement_needs_containment():
    with pytest.raises(DomainError):
        induced_refinement({1, 4}, {1, 2}, 5)


def test_complement_intervals():
    assert complement_intervals({2, 7, 9}, 11) == [(1, 1), (3, 6), (8, 8), (10, 10)]
    assert complement_intervals({1, 2, 3}, 4) == []


@pytest.mark.parametrize('check, n', [
    (verify_composition_bijection, 7),
    (verify_bisect_properties, 7),
    (verify_refinements_induced, 6),
    (verify_eq20, 6),
])
def test_composition_identities(check, n):
    assert check(n).verified
