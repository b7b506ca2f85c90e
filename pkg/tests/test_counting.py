import pytest

from services.compositions import fiber
from services.counting import (
    CountingService,
    FormedSpaceSpec,
    a_orthogonal,
    a_orthogonal_typed,
    a_recursive_sp_u,
    alpha_base_sp_u,
    alpha_orthogonal_prop3,
    explore_full_sum,
    fe_constants,
    group_order,
    group_order_char2_orthogonal,
    normalize,
    p_orthogonal,
    p_sharp,
    verify_conjecture_C,
    verify_cross_paths,
    verify_fiber_constancy,
    verify_prop2,
    verify_theorem2,
    verify_theorem_A,
    verify_theorem_B,
    verify_typed_counts,
)
from services.errors import ConsistencyError, DomainError, ResourceBoundError
from services.exactalg import LaurentPoly

Q = LaurentPoly.monomial(1)


def geometric(top: int, step: int) -> LaurentPoly:
    """1 + q^-step + ... + q^-top"""
    return LaurentPoly({-e: 1 for e in range(0, top + 1, step)})


class TestFormedSpaceSpec:
    @pytest.mark.parametrize('args', [
        ('symplectic', 5, None, ()),
        ('orthogonal', 4, None, ()),
        ('orthogonal', 3, 1, ()),
        ('unitary', 3, None, (3,)),
        ('symplectic', 6, None, (3,)),
        ('orthogonal', 3, None, (1,)),
        ('hyperbolic', 2, None, ()),
    ])
    def test_rejects(self, args):
        with pytest.raises(DomainError):
            FormedSpaceSpec(*args)

    def test_flag_types(self):
        assert FormedSpaceSpec('symplectic', 6).flag_types() == [frozenset(), frozenset({2}), frozenset({4}), frozenset({2, 4})]
        assert len(FormedSpaceSpec('unitary', 4).flag_types()) == 8

    def test_dual(self, sp6_forms):
        assert sp6_forms.dual().forms_type == {2}
        assert FormedSpaceSpec('unitary', 5, None, {1, 3}).dual().forms_type == {2, 4}

    def test_vacuous(self):
        assert FormedSpaceSpec('symplectic', 4).is_vacuous({1})
        assert not FormedSpaceSpec('unitary', 4).is_vacuous({1})


class TestGroupOrders:
    def test_orders(self):
        assert group_order('symplectic', 2) == Q ** 3 - Q
        assert group_order('unitary', 1) == Q + 1
        assert group_order('orthogonal_even', 2, 1) == 2 * Q - 2
        assert group_order('orthogonal_odd', 3) == 2 * Q ** 3 - 2 * Q
        assert p_orthogonal(4, 1) == 2 * Q ** 2 * (Q ** 2 - 1) ** 2

    def test_p_sharp(self):
        assert p_sharp(1) == 2
        assert p_sharp(2, 1) == p_sharp(2, -1) == 2 * Q ** 2 - 2

    def test_characteristic_two(self):
        assert group_order_char2_orthogonal(3).evaluate_at(2) == 6

    def test_rejects(self):
        with pytest.raises(DomainError):
            group_order('orthogonal_even', 3)
        with pytest.raises(DomainError):
            group_order('orthogonal_even', 2, 0)
        with pytest.raises(DomainError):
            group_order('spin', 2)


class TestSymplecticUnitary:
    def test_plain_alphas(self):
        assert alpha_base_sp_u(FormedSpaceSpec('unitary', 2), {1}) == 1 - Q ** -1
        assert alpha_base_sp_u(FormedSpaceSpec('symplectic', 4), {2}) == 1 + Q ** -2
        assert alpha_base_sp_u(FormedSpaceSpec('symplectic', 4), set()) == 1

    def test_vacuous_type_counts_nothing(self, counting):
        spec = FormedSpaceSpec('symplectic', 4)
        assert alpha_base_sp_u(spec, {1}).is_zero()
        assert counting.alpha(spec, {1}).is_zero()

    def test_flag_of_forms_counts(self, sp6_forms):
        assert a_recursive_sp_u(sp6_forms, {2}) == Q ** 8 + Q ** 4 + Q ** 2
        assert a_recursive_sp_u(sp6_forms, {4}) == Q ** 8 + Q ** 6 + 1

    @pytest.mark.parametrize('method', ['closed', 'recursive', 'coxeter', 'cross'])
    def test_flag_of_forms_alphas(self, counting, sp6_forms, method):
        assert counting.alpha(sp6_forms, {2}, method) == 1 + Q ** -4 + Q ** -6
        assert counting.alpha(sp6_forms, {4}, method) == 1 + Q ** -2 + Q ** -8
        assert counting.alpha(sp6_forms, {2, 4}, method) == geometric(10, 2)

    def test_normalize(self):
        assert normalize(Q ** 3 - Q) == 1 - Q ** -2
        assert normalize(LaurentPoly.zero()).is_zero()
        assert normalize(LaurentPoly.one()) == 1

    def test_unknown_method(self, counting, sp6_forms):
        with pytest.raises(DomainError):
            counting.alpha(sp6_forms, {2}, 'guess')

    def test_coxeter_rank_bound(self, tight_settings, sp6_forms):
        service = CountingService(tight_settings(max_coxeter_rank=2))
        with pytest.raises(ResourceBoundError):
            service.alpha_coxeter(sp6_forms, {2})

    def test_cross_disagreement(self, counting, sp6_forms, monkeypatch):
        monkeypatch.setattr(CountingService, 'alpha_coxeter', lambda self, spec, J: LaurentPoly.zero())
        with pytest.raises(ConsistencyError):
            counting.alpha(sp6_forms, {2}, 'cross')


class TestOrthogonal:
    @pytest.mark.parametrize('n, epsilon, J, expected', [
        (3, None, {1}, Q ** 2),
        (3, None, {1, 2}, Q ** 3 - Q),
        (4, 1, {1}, Q ** 3 - Q),
        (4, -1, {1}, Q ** 3 + Q),
        (4, 1, {2}, Q ** 4 + Q ** 2),
        (4, -1, {1, 2, 3}, Q ** 6 - Q ** 2),
        (4, 1, {1, 2, 3}, Q ** 6 - 2 * Q ** 4 + Q ** 2),
    ])
    def test_counts(self, n, epsilon, J, expected):
        assert a_orthogonal(n, epsilon, J) == expected

    @pytest.mark.parametrize('n, epsilon, J, expected', [
        (3, None, {1, 2}, 1 - Q ** -2),
        (4, 1, {2}, 1 + Q ** -2),
        (4, -1, {2}, 1 + Q ** -2),
        (4, 1, {1}, 1 - Q ** -2),
        (4, -1, {1, 2, 3}, 1 - Q ** -4),
        (4, 1, set(), LaurentPoly.one()),
    ])
    def test_closed_alphas(self, n, epsilon, J, expected):
        assert alpha_orthogonal_prop3(n, epsilon, J) == expected
        assert normalize(a_orthogonal(n, epsilon, J)) == expected

    def test_rejects_missing_sign(self):
        with pytest.raises(DomainError):
            a_orthogonal(4, None, {1})

    @pytest.mark.parametrize('n, epsilon', [(4, None), (4, 0), (3, 1)])
    def test_chessboard_sum_rejects_bad_sign(self, counting, n, epsilon):
        with pytest.raises(DomainError):
            counting.conjecture_alpha(n, epsilon, {1})

    def test_typed_count_is_a_quotient(self):
        plus = a_orthogonal_typed(4, 1, 2, 1)
        assert not plus.is_polynomial()
        assert plus.den == 2
        assert plus.evaluate_at(3) == 72
        assert a_orthogonal_typed(4, 1, 2, -1).evaluate_at(3) == 18

    def test_typed_counts_sum_to_untyped(self):
        total = a_orthogonal_typed(4, 1, 2, 1) + a_orthogonal_typed(4, 1, 2, -1)
        assert total.to_polynomial() == Q ** 4 + Q ** 2

    def test_typed_needs_delta_for_even_dimensions(self):
        with pytest.raises(DomainError):
            a_orthogonal_typed(4, 1, 2)
        with pytest.raises(DomainError):
            a_orthogonal_typed(4, 1, 1, 1)

    def test_conjecture_alpha(self, counting):
        assert counting.conjecture_alpha(3, None, {1, 2}) == 1 - Q ** -2
        assert counting.conjecture_alpha(4, 1, {1}) == 1 - Q ** -2
        assert counting.conjecture_alpha(4, -1, set()) == 1

    def test_alpha_lifted(self, counting):
        assert counting.alpha_lifted(3, None, set()) == 1
        assert counting.alpha_lifted(3, None, {1}) == 1 - Q ** -2
        assert counting.alpha_lifted(4, 1, {1}) == 1 + Q ** -2
        assert counting.alpha_lifted(6, -1, {1, 2}, check_fiber=True) == alpha_orthogonal_prop3(6, -1, fiber({1, 2}, 6)[0])


class TestConstants:
    @pytest.mark.parametrize('spec, a, b', [
        (FormedSpaceSpec('symplectic', 6, None, {4}), 2, 10),
        (FormedSpaceSpec('orthogonal', 3), 1, 2),
        (FormedSpaceSpec('orthogonal', 4, 1), 3, 4),
        (FormedSpaceSpec('orthogonal', 4, -1), 2, 4),
    ])
    def test_fe_constants(self, spec, a, b):
        constants = fe_constants(spec)
        assert (constants.a, constants.b) == (a, b)

    def test_factor(self):
        assert fe_constants(FormedSpaceSpec('orthogonal', 3)).factor() == -(Q ** 2)


class TestIgusaFunctions:
    def test_orthogonal_three(self, counting):
        ig = counting.igusa_function(FormedSpaceSpec('orthogonal', 3))
        assert ig.render() == '(1 − q⁻²X₁X₂)/((1−X₁)(1−X₂))'

    def test_symplectic_slots_are_relabeled(self, counting, sp6_forms):
        ig = counting.igusa_function(sp6_forms)
        assert ig.n_vars == 2
        assert ig.render() == '(1 + (q⁻⁴+q⁻⁶)X₁ + (q⁻²+q⁻⁸)X₂ + q⁻¹⁰X₁X₂)/((1−X₁)(1−X₂))'


class TestFunctionalEquations:
    @pytest.mark.parametrize('spec', [
        FormedSpaceSpec('symplectic', 4),
        FormedSpaceSpec('unitary', 3),
        FormedSpaceSpec('orthogonal', 3),
        FormedSpaceSpec('orthogonal', 4, 1),
        FormedSpaceSpec('orthogonal', 5),
    ])
    def test_theorem_A(self, spec):
        assert verify_theorem_A(spec).verified

    def test_theorem_A_rejects_forms(self, sp6_forms):
        with pytest.raises(DomainError):
            verify_theorem_A(sp6_forms)

    @pytest.mark.parametrize('spec', [
        FormedSpaceSpec('symplectic', 6, None, {4}),
        FormedSpaceSpec('symplectic', 6, None, {2, 4}),
        FormedSpaceSpec('unitary', 3, None, {1}),
        FormedSpaceSpec('unitary', 4, None, {1, 3}),
    ])
    def test_theorem_B(self, spec):
        assert verify_theorem_B(spec).verified

    def test_theorem_B_reduces_to_theorem_A(self):
        spec = FormedSpaceSpec('unitary', 3)
        assert verify_theorem_B(spec).instances_checked == verify_theorem_A(spec).instances_checked

    def test_theorem_B_rejects_orthogonal(self):
        with pytest.raises(DomainError):
            verify_theorem_B(FormedSpaceSpec('orthogonal', 3))

    @pytest.mark.parametrize('n, epsilon', [(3, None), (4, 1), (4, -1), (5, None)])
    def test_theorem2(self, n, epsilon):
        assert verify_theorem2(n, epsilon).verified

    @pytest.mark.parametrize('m, parity, epsilon', [(2, 'odd', None), (2, 'even', 1), (2, 'even', -1), (3, 'odd', None)])
    def test_prop2(self, m, parity, epsilon):
        assert verify_prop2(m, parity, epsilon).verified

    @pytest.mark.parametrize('n, epsilon', [(3, None), (4, 1), (4, -1), (5, None), (6, -1)])
    def test_conjecture_C(self, n, epsilon):
        report = verify_conjecture_C(n, epsilon)
        assert report.verified
        assert report.details['proven_instances'] + report.details['conjectural_instances'] == 2 ** (n - 1)

    @pytest.mark.parametrize('spec', [
        FormedSpaceSpec('symplectic', 6, None, {4}),
        FormedSpaceSpec('unitary', 3),
        FormedSpaceSpec('orthogonal', 5),
    ])
    def test_cross_paths(self, spec):
        assert verify_cross_paths(spec).verified

    def test_fiber_constancy(self):
        assert verify_fiber_constancy(7).verified
        assert verify_fiber_constancy(6, 1).verified

    def test_typed_counts(self):
        assert verify_typed_counts(5).verified
        assert verify_typed_counts(6, -1).verified


class TestExploration:
    def test_full_sum_is_recorded(self):
        report = explore_full_sum(3)
        assert report.vacuous == 4
        assert set(report.details) == {'equal_to_alpha', 'all_equal'}

    def test_full_sum_rejects_minus_sign(self):
        with pytest.raises(DomainError):
            explore_full_sum(4, -1)
