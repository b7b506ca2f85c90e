import numpy as np
import pytest

from services.counting import FormedSpaceSpec
from services.errors import DomainError, ResourceBoundError
from services.oracle import (
    A3_POLYNOMIALS,
    OracleService,
    a3_negative_control,
    count_flags,
    count_typed_subspaces,
    get_field,
    is_nondegenerate,
    isometry_group_order,
    standard_flag_of_forms,
    standard_space,
    subspaces,
    verify_a3_table,
    witt_type,
)


class TestFields:
    @pytest.mark.parametrize('order', [2, 3, 4, 5, 7, 9])
    def test_tables(self, order):
        F = get_field(order)
        assert F.order == order
        for x in F.nonzero():
            assert F.mul[x, F.inv[x]] == 1
            assert F.add[x, F.neg[x]] == 0

    def test_quadratic_extensions(self):
        F4, F9 = get_field(4), get_field(9)
        # x^2 = x + 1 in F4, x^2 = -1 in F9
        assert F4.mul[2, 2] == 3
        assert F9.mul[3, 3] == 2
        assert (F4.base_order, F9.base_order, get_field(7).base_order) == (2, 3, 7)
        assert sorted(x for x in F9.elements() if F9.involution[x] == x) == [0, 1, 2]

    def test_unsupported_order(self):
        with pytest.raises(DomainError):
            get_field(6)


class TestSpaces:
    def test_standard_spaces_are_nondegenerate(self):
        for kind, n, order, epsilon in [
            ('symplectic', 4, 3, None),
            ('unitary', 3, 4, None),
            ('orthogonal', 3, 2, None),
            ('orthogonal', 4, 3, -1),
            ('orthogonal', 2, 5, 1),
        ]:
            assert standard_space(kind, n, get_field(order), epsilon).is_nondegenerate_space()

    def test_isotropic_line(self):
        space = standard_space('orthogonal', 2, get_field(3), 1)
        assert not is_nondegenerate(space, np.array([[1, 0]]))
        assert is_nondegenerate(space, np.array([[1, 1]]))

    def test_elliptic_plane_is_anisotropic(self):
        F = get_field(3)
        space = standard_space('orthogonal', 2, F, -1)
        vectors = np.array([[a, b] for a in F.elements() for b in F.elements()][1:])
        assert np.all(space.quad_values(vectors) != 0)

    def test_characteristic_two_radical(self):
        space = standard_space('orthogonal', 3, get_field(2))
        assert space.radical(np.eye(3, dtype=np.int64)).shape[0] == 1
        assert space.is_nondegenerate_space()

    def test_hermitian_needs_quadratic_extension(self):
        with pytest.raises(DomainError):
            standard_space('unitary', 2, get_field(3))

    def test_symplectic_needs_even_dimension(self):
        with pytest.raises(DomainError):
            standard_space('symplectic', 3, get_field(2))


class TestEnumeration:
    @pytest.mark.parametrize('order, n, dim, count', [(2, 3, 1, 7), (2, 4, 2, 35), (3, 4, 2, 130), (2, 3, 0, 1)])
    def test_subspace_counts(self, order, n, dim, count):
        assert sum(1 for _ in subspaces(get_field(order), n, dim)) == count

    def test_subspaces_are_distinct(self):
        rows = {tuple(U.ravel()) for U in subspaces(get_field(3), 3, 2)}
        assert len(rows) == 13

    def test_bad_dimension(self):
        with pytest.raises(DomainError):
            list(subspaces(get_field(2), 3, 4))

    def test_flag_counts(self):
        assert count_flags(standard_space('orthogonal', 3, get_field(2)), {1}) == 4
        assert count_flags(standard_space('symplectic', 4, get_field(3)), {2}) == 90
        assert count_flags(standard_space('symplectic', 4, get_field(3)), set()) == 1

    def test_flag_type_out_of_range(self):
        with pytest.raises(DomainError):
            count_flags(standard_space('orthogonal', 3, get_field(3)), {3})

    def test_flag_of_forms(self):
        target = standard_flag_of_forms(4, {2}, 'symplectic', get_field(2))
        assert count_flags(target, set()) == 1

    def test_typed_counts(self):
        space = standard_space('orthogonal', 4, get_field(3), 1)
        assert count_typed_subspaces(space, 2, 1) == 72
        assert count_typed_subspaces(space, 2, -1) == 18
        assert count_typed_subspaces(space, 1) == 24

    def test_witt_type_of_planes(self):
        F = get_field(3)
        assert witt_type(standard_space('orthogonal', 2, F, 1), np.eye(2, dtype=np.int64)) == 1
        assert witt_type(standard_space('orthogonal', 2, F, -1), np.eye(2, dtype=np.int64)) == -1

    def test_typed_counts_need_quadratic_space(self):
        with pytest.raises(DomainError):
            count_typed_subspaces(standard_space('symplectic', 2, get_field(3)), 1)

    @pytest.mark.parametrize('kind, n, order, epsilon, expected', [
        ('symplectic', 2, 2, None, 6),
        ('unitary', 1, 4, None, 3),
        ('orthogonal', 2, 3, 1, 4),
        ('orthogonal', 2, 3, -1, 8),
        ('orthogonal', 3, 2, None, 6),
    ])
    def test_isometry_group_orders(self, kind, n, order, epsilon, expected):
        assert isometry_group_order(standard_space(kind, n, get_field(order), epsilon)) == expected


class TestOracleService:
    @pytest.mark.parametrize('spec, order', [
        (FormedSpaceSpec('orthogonal', 3), 3),
        (FormedSpaceSpec('orthogonal', 4, -1), 2),
        (FormedSpaceSpec('symplectic', 4), 2),
        (FormedSpaceSpec('unitary', 2), 4),
        (FormedSpaceSpec('symplectic', 4, None, {2}), 2),
    ])
    def test_cross_validate(self, spec, order):
        report = OracleService().cross_validate(spec, order)
        assert report.verified
        assert report.instances_checked == len(spec.flag_types())

    def test_oracle_table(self):
        table = OracleService().oracle_table(FormedSpaceSpec('orthogonal', 3), 2)
        assert table[frozenset({1})] == 4
        assert table[frozenset()] == 1

    def test_unitary_needs_quadratic_extension(self):
        with pytest.raises(DomainError):
            OracleService().field_for(FormedSpaceSpec('unitary', 2), 3)

    def test_ops_bound(self, tight_settings):
        service = OracleService(tight_settings(max_oracle_ops=10))
        with pytest.raises(ResourceBoundError):
            service.count_flags(standard_space('orthogonal', 3, get_field(3)), {1})

    def test_typed_cross_validate(self):
        assert OracleService().typed_cross_validate(4, -1, 3).verified

    def test_characteristic_independence(self):
        report = OracleService().characteristic_independence(3, orders=(2, 3))
        assert report.verified
        assert set(report.details['counts']) == {'2', '3'}

    def test_isometry_invariance(self):
        assert OracleService().isometry_invariance(FormedSpaceSpec('orthogonal', 3), 3, trials=2).verified


class TestCounterexample:
    def test_table(self):
        table = OracleService().a3_counterexample_table(2)
        assert table[frozenset({1})] == 8
        assert table[frozenset({2})] == 20
        assert table[frozenset({1, 3})] == 32
        assert table[frozenset({1, 2, 3})] == 48
        assert set(table) == set(A3_POLYNOMIALS)

    def test_table_matches_polynomials(self):
        assert verify_a3_table().verified

    def test_needs_characteristic_two(self):
        with pytest.raises(DomainError):
            OracleService().a3_counterexample_table(3)

    def test_functional_equation_fails(self):
        reports = a3_negative_control()
        assert len(reports) == 2
        assert not any(report.verified for report in reports)
