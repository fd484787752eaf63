"""The worked generating-function computations."""

from fractions import Fraction
from math import factorial

import pytest

from powerstruct import (
    ConjugacyClassData,
    GroupActionData,
    IntegralityError,
    LaurentPoly,
    SpecializationMode,
    SymFunc,
    TruncSeries,
    config_space_series,
    harer_zagier,
    hyperelliptic_class,
    irreducible_class,
    irreducible_specialize,
    lambda_t,
    moduli_g2_series,
    poly_space_class,
    poly_space_series,
    power,
    quotient_euler_egf,
    quotient_euler_series,
    recompose,
    factorize,
    specialize,
    unordered_config_product,
)

L = LaurentPoly.var("L")
Q = LaurentPoly.var("q")


class TestPolySpaceClass:
    def test_one_variable_is_monomial(self):
        # oracle: direct expansion of (L^(N+1) - L^N)/(L - 1)
        for degree in range(1, 6):
            assert poly_space_class(1, degree) == L**degree

    def test_two_variables(self):
        # oracles: exact polynomial division
        assert poly_space_class(2, 1) == L**2 + L
        assert poly_space_class(2, 2) == L**5 + L**4 + L**3

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            poly_space_class(0, 1)


class TestIrreducibleClass:
    def test_one_variable(self):
        assert irreducible_class(1, 1) == L
        for degree in range(2, 7):
            assert irreducible_class(1, degree) == LaurentPoly.zero(("L",))

    def test_degree_one_is_whole_space(self):
        assert irreducible_class(2, 1) == poly_space_class(2, 1)

    def test_degree_two_set_difference_oracle(self):
        # [Irr_2] = [P_2] - [S^2 Irr_1]; the symmetric square comes from the
        # lambda series of [Irr_1]
        sym_square = lambda_t(irreducible_class(2, 1), 2).coeffs[2]
        assert irreducible_class(2, 2) == poly_space_class(2, 2) - sym_square
        assert irreducible_class(2, 2) == L**5 - L**2

    @pytest.mark.parametrize("n_vars", [1, 2, 3])
    def test_euler_factorization_consistency(self, n_vars):
        # the polynomial-space series factors with exponents [Irr_k]
        order = 5
        series = poly_space_series(n_vars, order)
        exponents = factorize(series)
        assert recompose(exponents, order) == series
        for k in range(1, order + 1):
            assert exponents.exponents[k - 1] == irreducible_class(n_vars, k)

    @pytest.mark.parametrize("n_vars", [1, 2, 3])
    def test_integrality(self, n_vars):
        for degree in range(1, 6):
            cls = irreducible_class(n_vars, degree)
            assert cls.is_integral()


class TestIrreducibleSpecialize:
    def test_euler_characteristics(self):
        for n_vars in (1, 2, 3):
            assert irreducible_specialize(n_vars, 1, "euler") == n_vars
            for degree in range(2, 7):
                assert irreducible_specialize(n_vars, degree, "euler") == 0

    def test_hodge_deligne(self):
        u = LaurentPoly.var("u", ("u", "v"))
        v = LaurentPoly.var("v", ("u", "v"))
        assert irreducible_specialize(1, 1, "hodge_deligne") == u * v
        assert irreducible_specialize(2, 2, "hodge_deligne") == u**5 * v**5 - u**2 * v**2

    def test_unknown_target(self):
        with pytest.raises(ValueError):
            irreducible_specialize(1, 1, "betti")


class TestConfigSpace:
    def test_point_has_no_multi_configurations(self):
        series = config_space_series(LaurentPoly.constant(1), 4)
        assert series.coeffs[0] == 1
        assert series.coeffs[1] == SymFunc.p(1, 4)
        assert all(series.coeffs[n] == SymFunc.zero(4) for n in range(2, 5))

    def test_specializations(self):
        order = 6
        x_class = 1 + Q
        series = config_space_series(x_class, order)
        one = LaurentPoly.constant(1, ("q",))
        invariants = power(TruncSeries([one, one], order), x_class)
        signed = power(TruncSeries([one, -one], order), x_class)
        ordered = TruncSeries([Fraction(1), Fraction(1)], order).usual_power(x_class)
        for n in range(order + 1):
            coeff = series.coeffs[n]
            assert specialize(coeff, SpecializationMode.INVARIANTS) == invariants.coeffs[n]
            sign = 1 if n % 2 == 0 else -1
            assert specialize(coeff, SpecializationMode.SIGN) == sign * signed.coeffs[n]
            assert specialize(coeff, SpecializationMode.ORDERED) == factorial(n) * ordered.coeffs[n]


class TestUnorderedConfig:
    def test_cross_checked_product(self):
        # both routes are asserted equal inside; the power route is returned
        series = unordered_config_product([1, 0, 1], 6)
        expected = power(
            TruncSeries([LaurentPoly.constant(1, ("q",))] * 2, 6), 1 + Q**2
        )
        zero = LaurentPoly.zero(("q",))
        assert series == expected.map_coeffs(lambda c: c + zero)

    def test_point(self):
        series = unordered_config_product([1], 4)
        assert series.coeffs[0] == 1 and series.coeffs[1] == 1
        assert all(c == 0 for c in series.coeffs[2:])

    def test_sign_variant_point(self):
        series = unordered_config_product([1], 4, signed=True)
        assert series.coeffs[0] == 1 and series.coeffs[1] == 1
        assert all(c == 0 for c in series.coeffs[2:])

    def test_sign_variant_cross_check(self):
        # the internal equality assertion is the real content; smoke a case
        series = unordered_config_product([1, 2, 1], 5, signed=True)
        assert series.coeffs[0] == 1


def z2_on_sphere() -> GroupActionData:
    """An involution with two fixed points on a sphere-like space."""
    return GroupActionData(
        group_order=2,
        classes=(
            ConjugacyClassData(size=1, orbit_euler={1: 2}, identity=True),
            ConjugacyClassData(size=1, orbit_euler={1: 2, 2: 0}),
        ),
    )


class TestQuotientEuler:
    def test_trivial_group(self):
        action = GroupActionData(
            group_order=1,
            classes=(ConjugacyClassData(size=1, orbit_euler={1: 3}, identity=True),),
        )
        series = quotient_euler_series(action, 4)
        p1 = SymFunc.p(1, 4)
        base = TruncSeries([SymFunc.constant(1, 4), p1], 4)
        expected = base.usual_power(Fraction(3))
        assert series == expected.map_coeffs(lambda c: c + SymFunc.zero(4))
        # a trivial action is just the configuration series of the space
        assert series == config_space_series(LaurentPoly.constant(3), 4)

    def test_involution_example(self):
        # both classes contribute (1 + p1 t)^2, so the average is the same
        series = quotient_euler_series(z2_on_sphere(), 4)
        p1 = SymFunc.p(1, 4)
        assert series.coeffs[0] == 1
        assert series.coeffs[1] == 2 * p1
        assert series.coeffs[2] == p1 * p1
        assert series.coeffs[3] == SymFunc.zero(4)

    def test_constant_term_is_one(self):
        action = GroupActionData(
            group_order=6,
            classes=(
                ConjugacyClassData(size=1, orbit_euler={1: 4}, identity=True),
                ConjugacyClassData(size=3, orbit_euler={1: 2, 2: 1}),
                ConjugacyClassData(size=2, orbit_euler={1: 1, 3: 1}),
            ),
        )
        assert quotient_euler_series(action, 5).coeffs[0] == 1

    def test_egf(self):
        series = quotient_euler_egf(z2_on_sphere(), 4)
        expected = TruncSeries([Fraction(1), Fraction(1)], 4).usual_power(Fraction(2))
        assert series == expected

    def test_egf_trivial(self):
        action = GroupActionData(
            group_order=1,
            classes=(ConjugacyClassData(size=1, orbit_euler={1: 5}, identity=True),),
        )
        expected = TruncSeries([Fraction(1), Fraction(1)], 6).usual_power(Fraction(5))
        assert quotient_euler_egf(action, 6) == expected

    def test_ordered_specialization_matches_egf(self):
        action = GroupActionData(
            group_order=2,
            classes=(
                ConjugacyClassData(size=1, orbit_euler={1: 3}, identity=True),
                ConjugacyClassData(size=1, orbit_euler={1: 1, 2: 1}),
            ),
        )
        order = 5
        series = quotient_euler_series(action, order)
        egf = quotient_euler_egf(action, order)
        for n in range(order + 1):
            lhs = specialize(series.coeffs[n], SpecializationMode.ORDERED)
            assert lhs == factorial(n) * egf.coeffs[n]

    def test_validation(self):
        with pytest.raises(ValueError):
            GroupActionData(group_order=3, classes=(
                ConjugacyClassData(size=1, orbit_euler={1: 1}, identity=True),
            ))
        with pytest.raises(ValueError):
            GroupActionData(group_order=1, classes=(
                ConjugacyClassData(size=1, orbit_euler={1: 1}),
            ))
        with pytest.raises(ValueError):
            ConjugacyClassData(size=2, orbit_euler={1: 1}, identity=True)
        with pytest.raises(ValueError):
            ConjugacyClassData(size=1, orbit_euler={2: 5}, identity=True)

    def test_json_round_trip(self):
        action = z2_on_sphere()
        data = action.to_json_dict()
        assert data == {
            "group_order": 2,
            "classes": [
                {"size": 1, "identity": True, "orbit_euler": {"1": 2}},
                {"size": 1, "orbit_euler": {"1": 2, "2": 0}},
            ],
        }
        assert GroupActionData.from_json_dict(data) == action


class TestHyperelliptic:
    def test_classes(self):
        for genus in range(2, 7):
            assert hyperelliptic_class(genus) == L ** (2 * genus - 1)

    def test_hodge_deligne_image(self):
        u = LaurentPoly.var("u", ("u", "v"))
        v = LaurentPoly.var("v", ("u", "v"))
        assert hyperelliptic_class(2, "hodge_deligne") == (u * v) ** 3

    def test_needs_genus_two(self):
        with pytest.raises(ValueError):
            hyperelliptic_class(1)


class TestModuliG2:
    def test_low_order_coefficients(self):
        series = moduli_g2_series(4)
        p1 = SymFunc.p(1, 4)
        p3 = SymFunc.p(3, 4)
        p4 = SymFunc.p(4, 4)
        assert series.coeffs[0] == 1
        assert series.coeffs[1] == 2 * p1
        assert series.coeffs[2] == p1 * p1
        assert series.coeffs[3] == SymFunc.zero(4)
        assert series.coeffs[4] == (
            Fraction(1, 2) * p4 + Fraction(2, 3) * p1 * p3 - Fraction(1, 6) * p1**4
        )

    def test_prefactors_sum_to_one(self):
        from powerstruct import GENUS2_STRATA

        assert sum(s.prefactor for s in GENUS2_STRATA) == 1
        assert len(GENUS2_STRATA) == 10

    def test_order_zero(self):
        assert moduli_g2_series(0).coeffs[0] == 1


class TestHarerZagier:
    def test_genus_two_unmarked(self):
        assert harer_zagier(2, 0) == Fraction(-1, 240)

    def test_direct_evaluations(self):
        # (-1)^1 * (0! * 1 / 2!) * B_2 with B_2 = 1/6
        assert harer_zagier(1, 1) == Fraction(-1, 12)
        # (-1)^1 * (2! * 3 / 4!) * B_4 with B_4 = -1/30
        assert harer_zagier(2, 1) == Fraction(1, 120)
        # one more marked point: (-1)^2 * (3! * 3 / 4!) * (-1/30)
        assert harer_zagier(2, 2) == Fraction(-1, 40)

    def test_fibration_recursion(self):
        # chi(M_{g,n+1}) = (2 - 2g - n) chi(M_{g,n})
        for genus in (1, 2, 3):
            for marked in range(2, 5):
                assert harer_zagier(genus, marked + 1) == (
                    2 - 2 * genus - marked
                ) * harer_zagier(genus, marked)

    def test_domain(self):
        with pytest.raises(ValueError):
            harer_zagier(1, 0)
        with pytest.raises(ValueError):
            harer_zagier(0, 5)
