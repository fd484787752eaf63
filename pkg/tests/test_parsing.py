"""The expression grammar."""

from fractions import Fraction

import pytest

from powerstruct import LaurentPoly, ParseError, SymFunc, TruncSeries, basis_in_p
from powerstruct.parsing import (
    parse_expression,
    parse_poly,
    parse_series,
    parse_symfunc,
    scan_variables,
)

L = LaurentPoly.var("L")


class TestPolyGrammar:
    def test_simple(self):
        assert parse_poly("L^5 - L^2") == L**5 - L**2
        assert parse_poly("1+L") == 1 + L

    def test_rational_coefficients(self):
        assert parse_poly("1/2*L + 1") == Fraction(1, 2) * L + 1

    def test_negative_exponents(self):
        assert parse_poly("L^-1 + L^(-2)") == L**-1 + L**-2

    def test_multivariate(self):
        p = parse_poly("u^2*v - 3")
        u = LaurentPoly.var("u", ("u", "v"))
        v = LaurentPoly.var("v", ("u", "v"))
        assert p == u**2 * v - 3

    def test_parentheses_and_unary(self):
        assert parse_poly("-(L - 1)^2") == -(L**2) + 2 * L - 1

    def test_poly_division(self):
        assert parse_poly("(L^2 - L)/(L - 1)") == L

    def test_round_trip_canonical_text(self):
        for p in (L**5 - L**2, Fraction(1, 2) * L + 1, L**-1, LaurentPoly.zero(("L",))):
            assert parse_poly(str(p)) == p


class TestSymFuncGrammar:
    def test_power_sums(self):
        f = parse_symfunc("1/2*p[1,1] + 1/2*p[2]", bound=4)
        assert f == basis_in_p("h", 2, 4)

    def test_basis_atoms(self):
        assert parse_symfunc("h[2]", bound=4) == basis_in_p("h", 2, 4)
        assert parse_symfunc("e[2]", bound=4) == basis_in_p("e", 2, 4)
        assert parse_symfunc("s[2,1]", bound=4) == basis_in_p("s", (2, 1), 4)

    def test_polynomial_coefficients(self):
        f = parse_symfunc("u*p[1]", bound=3)
        u = LaurentPoly.var("u")
        assert f == u * SymFunc.p(1, 3, ("u",))

    def test_round_trip_canonical_text(self):
        f = basis_in_p("h", 3, 6) - 2 * SymFunc.p(1, 6)
        assert parse_symfunc(str(f), bound=6) == f


class TestSeriesGrammar:
    def test_polynomial_series(self):
        assert parse_series("1+t", 4) == TruncSeries([1, 1], 4)

    def test_rational_function(self):
        geom = parse_series("1/(1 - L*t)", 3)
        assert geom == TruncSeries([1, L, L**2, L**3], 3)

    def test_power(self):
        assert parse_series("(1+t)^3", 4) == TruncSeries([1, 3, 3, 1, 0], 4)

    def test_symfunc_coefficients(self):
        series = parse_series("1 + p[1]*t", 3)
        assert series.coeffs[1] == SymFunc.p(1, 3)

    def test_constant_promoted(self):
        assert parse_series("5", 2) == TruncSeries.constant(Fraction(5), 2)


class TestErrors:
    def test_unknown_character(self):
        with pytest.raises(ParseError):
            parse_expression("1 { 2")

    def test_trailing_input(self):
        with pytest.raises(ParseError):
            parse_expression("1 2")

    def test_t_needs_order(self):
        with pytest.raises(ParseError):
            parse_expression("1+t")

    def test_basis_needs_bound(self):
        with pytest.raises(ParseError):
            parse_expression("p[1]")

    def test_non_integer_exponent(self):
        with pytest.raises(ParseError):
            parse_expression("L^L")

    def test_unknown_variable_with_fixed_alphabet(self):
        with pytest.raises(ParseError):
            parse_expression("x + y", vars=("x",))

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_expression("   ")

    def test_expected_type(self):
        with pytest.raises(ParseError):
            parse_poly("p[1]")


def test_scan_variables():
    assert scan_variables("1/2*p[1,1] + u*t + L") == ("L", "u")
    assert scan_variables("h[2] + e[3] + s[1]") == ()
