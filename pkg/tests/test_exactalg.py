import random
from fractions import Fraction

import pytest
from jsonschema import ValidationError

from services.errors import DomainError, NotPolynomialError
from services.exactalg import (
    IgusaFunction,
    LaurentPoly,
    RatFunc,
    gaussian_binomial,
    gaussian_multinomial,
    igusa_from_F_coeffs,
    igusa_invert_base,
    igusa_invert_vars,
    igusa_render,
    laurent_arith,
    ratfunc_arith,
    subsets_of,
    to_polynomial,
)
from services.exactalg.identities import verify_gkp, verify_identity_i, verify_identity_ii, verify_lemma3
from services.schemas import validate_json

Q = LaurentPoly.monomial(1)


def X(terms):
    return LaurentPoly(terms, 'X')


def random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly({rng.randint(-4, 4): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))})


class TestLaurentPoly:
    def test_difference_of_squares(self):
        assert laurent_arith(Q + 1, Q - 1, 'mul') == Q ** 2 - 1

    def test_zero_annihilates(self):
        assert (Q ** 3 - Q) * LaurentPoly.zero() == LaurentPoly.zero()
        assert LaurentPoly.zero().is_zero()

    def test_shift_by_monomial(self):
        assert (1 + Q ** -2) * Q ** 2 == Q ** 2 + 1

    def test_zero_coefficients_are_dropped(self):
        p = LaurentPoly({0: 1, 3: 0, -2: 0})
        assert p.terms == {0: 1}
        assert (Q - Q).terms == {}

    def test_content(self):
        assert (-4 * Q ** 3 + 6 * Q ** -1).content() == 2
        assert LaurentPoly.zero().content() == 0

    def test_ring_axioms_on_random_triples(self):
        rng = random.Random(7)
        for _ in range(50):
            a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    @pytest.mark.parametrize('op', ['add', 'sub', 'mul', 'neg'])
    def test_laurent_arith_ops(self, op):
        a, b = Q + 2, Q ** -1
        expected = {'add': a + b, 'sub': a - b, 'mul': a * b, 'neg': -a}[op]
        assert laurent_arith(a, b, op) == expected

    def test_unknown_op(self):
        with pytest.raises(DomainError):
            laurent_arith(Q, Q, 'pow')

    def test_substitutions(self):
        assert (1 - Q ** -2).invert_var() == 1 - Q ** 2
        assert X({0: 1, 1: 1, 2: 1}).negate_var() == X({0: 1, 1: -1, 2: 1})
        assert (Q ** 3 - Q).evaluate_at(2) == 6
        assert (Q ** -1).evaluate_at(Fraction(1, 2)) == 2
        assert X({1: 1}).power_substitute(-2, 'q') == Q ** -2

    def test_evaluate_negative_power_at_zero(self):
        with pytest.raises(DomainError):
            (Q ** -1).evaluate_at(0)

    def test_power_substitute_zero(self):
        with pytest.raises(DomainError):
            Q.power_substitute(0)

    @pytest.mark.parametrize('poly, text', [
        (1 - Q ** -2, '1 − q⁻²'),
        (Q ** 8 + Q ** 4 + Q ** 2, 'q⁸ + q⁴ + q²'),
        (Q ** 3 - Q, 'q³ − q'),
        (LaurentPoly.zero(), '0'),
        (-2 * Q ** -1 + 3, '3 − 2q⁻¹'),
    ])
    def test_render_text(self, poly, text):
        assert poly.render() == text

    def test_render_compact_and_latex(self):
        assert (Q ** -4 + Q ** -6).render(compact=True) == 'q⁻⁴+q⁻⁶'
        assert (1 - Q ** -2).render('latex') == '1 - q^{-2}'

    def test_json_encoding(self):
        data = (Q ** 2 - 3).to_json()
        assert data == {'var': 'q', 'terms': [[0, '-3'], [2, '1']]}
        validate_json('polynomial', data)
        assert LaurentPoly.from_json(data) == Q ** 2 - 3

    def test_json_schema_rejects_zero_coefficient(self):
        with pytest.raises(ValidationError):
            validate_json('polynomial', {'var': 'q', 'terms': [[0, '0']]})

    def test_immutable(self):
        with pytest.raises(AttributeError):
            Q.var = 'Y'


class TestGaussian:
    def test_small_cases(self):
        assert gaussian_binomial(5, 0) == X({0: 1})
        assert gaussian_binomial(2, 1) == X({0: 1, 1: 1})
        assert gaussian_binomial(4, 2) == X({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})

    @pytest.mark.parametrize('a, b, order, count', [(3, 1, 2, 7), (4, 2, 2, 35), (4, 2, 3, 130)])
    def test_subspace_counts(self, a, b, order, count):
        assert gaussian_binomial(a, b).evaluate_at(order) == count

    def test_symmetry_and_degree(self):
        for a in range(13):
            for b in range(a + 1):
                value = gaussian_binomial(a, b)
                assert value == gaussian_binomial(a, a - b)
                assert value.degree() == b * (a - b)
                assert all(c > 0 for _, c in value.items())

    def test_rejects_a_below_b(self):
        with pytest.raises(DomainError):
            gaussian_binomial(2, 3)

    def test_multinomial(self):
        assert gaussian_multinomial(4, []) == X({0: 1})
        assert gaussian_multinomial(4, {1, 3}) == gaussian_binomial(4, 3) * gaussian_binomial(3, 1)
        assert gaussian_multinomial(3, {1, 2}).evaluate_at(2) == 21

    def test_multinomial_out_of_range(self):
        with pytest.raises(DomainError):
            gaussian_multinomial(4, {4})


class TestRatFunc:
    def test_polynomial_quotient(self):
        r = RatFunc(Q ** 2 - 1, Q - 1)
        assert r.is_polynomial()
        assert to_polynomial(r) == Q + 1

    def test_laurent_shift_stays_in_denominator(self):
        r = RatFunc(Q ** 3 - Q, Q ** 2)
        assert r.num == Q ** 2 - 1
        assert r.den == Q
        assert not r.is_polynomial()
        assert r.is_laurent()
        assert r.to_polynomial() == Q - Q ** -1

    def test_positive_shift_lands_in_numerator(self):
        r = RatFunc(Q ** 2 + Q ** 3, Q ** -1 + 1)
        assert r.num == Q ** 3
        assert r.den == LaurentPoly.one()

    def test_not_polynomial_carries_denominator(self):
        with pytest.raises(NotPolynomialError) as info:
            RatFunc(LaurentPoly.one(), Q + 1).to_polynomial()
        assert info.value.denominator == Q + 1

    def test_canonical_form(self):
        r = RatFunc(2 * Q + 2, 4 * Q + 4)
        assert r.num == LaurentPoly.one()
        assert r.den == LaurentPoly.constant(2)
        s = RatFunc(Q - 1, -(Q ** 2) + 1)
        assert s.den == Q + 1
        assert s.num == LaurentPoly.constant(-1)

    def test_equality_is_canonical(self):
        assert RatFunc(Q ** 2 - 1, Q + 1) == RatFunc(Q - 1)
        assert RatFunc(1, Q) * RatFunc(Q, 1) == RatFunc(1)

    @pytest.mark.parametrize('op', ['add', 'sub', 'mul', 'div'])
    def test_arith_matches_evaluation(self, op):
        a, b = RatFunc(Q + 2, Q - 1), RatFunc(Q, Q + 3)
        result = ratfunc_arith(a, b, op)
        x, y = a.evaluate_at(5), b.evaluate_at(5)
        expected = {'add': x + y, 'sub': x - y, 'mul': x * y, 'div': x / y}[op]
        assert result.evaluate_at(5) == expected

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            RatFunc(Q, LaurentPoly.zero())
        with pytest.raises(ZeroDivisionError):
            RatFunc(Q) / RatFunc(0)


IG3_COEFFS = {(): LaurentPoly.one(), (1,): LaurentPoly.one(), (2,): LaurentPoly.one(), (1, 2): 1 - Q ** -2}


class TestIgusaFunction:
    def test_F_to_e_basis(self):
        f = igusa_from_F_coeffs(2, {(1,): LaurentPoly.one()})
        assert f.coeffs == {frozenset({1}): LaurentPoly.one(), frozenset(): LaurentPoly.constant(-1)}
        assert igusa_from_F_coeffs(3, {(): LaurentPoly.one()}).coeffs == {frozenset(): LaurentPoly.one()}

    def test_render_orthogonal_three(self):
        f = igusa_from_F_coeffs(3, IG3_COEFFS)
        assert igusa_render(f) == '(1 − q⁻²X₁X₂)/((1−X₁)(1−X₂))'
        assert igusa_render(f, 'latex') == '\\frac{1 - q^{-2} X_{1} X_{2}}{(1 - X_{1})(1 - X_{2})}'

    def test_render_constant(self):
        assert IgusaFunction(2, {(): LaurentPoly.one()}).render() == '1'

    def test_json(self):
        f = igusa_from_F_coeffs(3, IG3_COEFFS)
        data = f.to_json()
        validate_json('igusa', data)
        assert data['basis'] == 'e'
        assert IgusaFunction.from_json(data) == f

    def test_invert_vars_single(self):
        e1 = IgusaFunction(1, {(1,): LaurentPoly.one()})
        assert igusa_invert_vars(e1).coeffs == {frozenset(): LaurentPoly.one(), frozenset({1}): LaurentPoly.constant(-1)}

    def test_invert_vars_is_involution(self):
        rng = random.Random(3)
        for _ in range(10):
            coeffs = {K: random_poly(rng) for K in subsets_of(range(1, 4))}
            f = IgusaFunction(3, coeffs)
            assert f.invert_vars().invert_vars() == f
            assert igusa_invert_base(igusa_invert_base(f)) == f

    def test_inversion_property_of_F(self):
        for J in subsets_of(range(1, 4)):
            lhs = igusa_from_F_coeffs(4, {J: LaurentPoly.one()}).invert_vars()
            rhs = igusa_from_F_coeffs(4, {K: LaurentPoly.one() for K in subsets_of(J)})
            if len(J) % 2:
                rhs = -rhs
            assert lhs == rhs

    def test_index_out_of_range(self):
        with pytest.raises(DomainError):
            IgusaFunction(2, {(3,): LaurentPoly.one()})


class TestIdentities:
    def test_lemma3(self):
        assert verify_lemma3(5).verified

    def test_identity_i(self):
        report = verify_identity_i(10)
        assert report.verified
        assert report.instances_checked == 11

    def test_identity_ii(self):
        assert verify_identity_ii(8).verified

    def test_gkp(self):
        report = verify_gkp(12)
        assert report.verified
        assert report.instances_checked == 78
