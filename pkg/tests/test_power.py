"""The power structure: lambda series, factorization, exponentiation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from powerstruct import (
    GradedAdamsElement,
    LaurentPoly,
    PowerStructError,
    SymFunc,
    TruncSeries,
    adams,
    binomial_power,
    factorize,
    lambda_t,
    moebius_exponent,
    power,
    recompose,
    verify_identity,
)
from powerstruct.arith import moebius

L = LaurentPoly.var("L")
Q = LaurentPoly.var("q")


def small_polys(max_degree=2, coeff=2):
    exps = st.integers(0, max_degree)
    coeffs = st.integers(-coeff, coeff).map(Fraction)
    return st.dictionaries(exps.map(lambda e: (e,)), coeffs, max_size=3).map(
        lambda terms: LaurentPoly(("L",), terms)
    )


def unit_poly_series(order=6):
    return st.lists(small_polys(), min_size=order, max_size=order).map(
        lambda tail: TruncSeries([LaurentPoly.constant(1, ("L",))] + tail, order)
    )


class TestLambdaT:
    def test_line_class_powers(self):
        for j in (0, 1, 2, 3):
            expected = TruncSeries([L ** (k * j) for k in range(4)], 3)
            assert lambda_t(L**j, 3) == expected

    def test_zero_gives_one(self):
        assert lambda_t(LaurentPoly.zero(("L",)), 6) == TruncSeries.one(6)

    def test_graded_element(self):
        for j in (1, 2, 3):
            series = lambda_t(GradedAdamsElement({j: 1}), 3)
            sums = [c.component_sum() for c in series.coeffs[1:]]
            assert sums[0] == 1
            assert sums[1] == Fraction(2) ** (j - 1) + Fraction(1, 2)
            assert sums[2] == (
                Fraction(3) ** (j - 1) + Fraction(2) ** (j - 1) + Fraction(1, 6)
            )

    @given(small_polys(), small_polys())
    @settings(max_examples=30)
    def test_additivity(self, x, y):
        order = 6
        assert lambda_t(x + y, order) == lambda_t(x, order) * lambda_t(y, order)

    @given(small_polys())
    @settings(max_examples=30)
    def test_log_derivative_recovers_adams(self, x):
        order = 8
        expected = [adams(x, n) for n in range(1, order + 1)]
        assert lambda_t(x, order).log_derivative() == expected


class TestFactorize:
    def test_one_plus_t(self):
        # (1 + t) = (1 - t^2)/(1 - t): exponents 1, -1, 0, 0, ...
        series = TruncSeries([Fraction(1), Fraction(1)], 8)
        result = factorize(series)
        assert list(result) == [1, -1, 0, 0, 0, 0, 0, 0]

    def test_exponential_gives_moebius(self):
        series = TruncSeries.t_var(10).exp()
        for algorithm in ("moebius", "iterative"):
            result = factorize(series, algorithm)
            assert list(result) == [Fraction(moebius(n), n) for n in range(1, 11)]

    def test_geometric_in_line_class(self):
        # 1/(1 - Lt) factors with the single exponent b_1 = L
        series = TruncSeries.one(6) / TruncSeries([1, -L], 6)
        result = factorize(series)
        assert list(result) == [L, 0, 0, 0, 0, 0]

    def test_needs_unit_constant_term(self):
        from powerstruct import ConstantTermError

        with pytest.raises(ConstantTermError):
            factorize(TruncSeries([Fraction(2), Fraction(1)], 3))

    @given(unit_poly_series())
    @settings(max_examples=25, deadline=None)
    def test_algorithms_agree(self, series):
        assert tuple(factorize(series, "moebius")) == tuple(
            factorize(series, "iterative")
        )

    @given(unit_poly_series())
    @settings(max_examples=25, deadline=None)
    def test_recompose_round_trip(self, series):
        assert recompose(factorize(series), series.order) == series


class TestRecompose:
    def test_single_exponent(self):
        assert recompose([L], 4) == TruncSeries([1, L, L**2, L**3, L**4], 4)

    def test_empty(self):
        assert recompose([], 5) == TruncSeries.one(5)


class TestPower:
    def test_geometric_base_is_lambda(self):
        order = 6
        geometric = TruncSeries([Fraction(1)] * (order + 1), order)
        x = L**2 + L
        assert power(geometric, x) == lambda_t(x, order)

    def test_axiom_degenerate_exponents(self):
        series = TruncSeries([LaurentPoly.constant(1, ("L",)), L, L**2], 5)
        assert power(series, LaurentPoly.zero(("L",))) == TruncSeries.one(5)
        assert power(series, LaurentPoly.constant(1, ("L",))) == series

    def test_unordered_points_on_p1(self):
        # (1 + t)^(1 + L) = (1 - L t^2)(1 + t)/(1 - L t)
        order = 12
        series = power(TruncSeries([Fraction(1), Fraction(1)], order), 1 + L)
        assert series.coeffs[1] == 1 + L
        assert series.coeffs[2] == L**2
        assert series.coeffs[3] == L**3 - L
        for k in range(4, order + 1):
            assert series.coeffs[k] == L**k - L ** (k - 2)

    @given(unit_poly_series(), small_polys())
    @settings(max_examples=20, deadline=None)
    def test_algorithms_agree(self, series, x):
        assert power(series, x, "factorize") == power(series, x, "product")


class TestBinomialPower:
    def test_exponent_one(self):
        a = L**2
        assert binomial_power(a, LaurentPoly.constant(1, ("L",)), 5) == TruncSeries(
            [LaurentPoly.constant(1, ("L",)), a], 5
        )

    def test_matches_power_on_two_term_base(self):
        a = L + 2
        x = L**2 - L
        order = 8
        base = TruncSeries([LaurentPoly.constant(1, ("L",)), a], order)
        assert binomial_power(a, x, order) == power(base, x)

    def test_equivariant_product_form(self):
        # prod (1 + p_n t^n)^{(1/n) sum mu(n/m) adams(e_X, m)} equals
        # (1 + p_1 t)^{e_X} for a Hodge-type class e_X
        order = 6
        e_x = 1 + Q
        bound = order
        p1 = SymFunc.p(1, bound, ("q",))
        base = TruncSeries([SymFunc.constant(1, bound, ("q",)), p1], order)
        lhs = binomial_power(p1, SymFunc.constant(e_x, bound), order)
        assert lhs == power(base, SymFunc.constant(e_x, bound))

    def test_poincare_exponent_form(self):
        # with a = 1 over the rationals the factors are (1 + t^n)^(e_n)
        order = 6
        poincare = 1 + Q**2
        lhs = binomial_power(Fraction(1), poincare, order)
        rhs = TruncSeries.one(order)
        for n in range(1, order + 1):
            e_n = moebius_exponent(poincare, n)
            base = TruncSeries(
                [Fraction(1)] + [Fraction(0)] * (n - 1) + [Fraction(1)], order
            )
            rhs = rhs * base.usual_power(e_n)
        assert lhs == rhs
        assert lhs == power(TruncSeries([Fraction(1), Fraction(1)], order), poincare)


class TestAxioms:
    """Definition axioms on randomized inputs (the acceptance suite runs the
    full 100-case version; this is the per-module spot check)."""

    @given(unit_poly_series(order=5), unit_poly_series(order=5), small_polys(), small_polys())
    @settings(max_examples=15, deadline=None)
    def test_multiplicativity_axioms(self, a, b, m, n):
        assert power(a * b, m) == power(a, m) * power(b, m)
        assert power(a, m + n) == power(a, m) * power(a, n)
        assert power(a, m * n) == power(power(a, n), m)

    @given(small_polys())
    @settings(max_examples=15, deadline=None)
    def test_linear_term(self, m):
        series = power(TruncSeries([Fraction(1), Fraction(1)], 4), m)
        assert series.coeffs[1] == m

    @given(unit_poly_series(order=3), small_polys(), st.integers(2, 3))
    @settings(max_examples=15, deadline=None)
    def test_substitution_axiom(self, a, m, k):
        assert power(a.substitute_tk(k), m) == power(a, m).substitute_tk(k)


class TestVerifyIdentity:
    def test_exp_moebius_holds(self):
        report = verify_identity("exp_moebius", 12)
        assert report.holds and report.first_discrepancy is None

    def test_euler_phi_holds(self):
        report = verify_identity("euler_phi", 12)
        assert report.holds

    def test_gcd_product_reports_discrepancy(self):
        report = verify_identity("gcd_product", 6)
        assert not report.holds
        assert report.first_discrepancy == {
            "term": "x^2*y",
            "lhs": "-1/2",
            "rhs": "0",
        }

    def test_unknown_identity(self):
        with pytest.raises(PowerStructError):
            verify_identity("no_such_identity", 4)
