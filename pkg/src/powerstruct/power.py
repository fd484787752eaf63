"""Power structures over lambda-rings.

The central objects are series A(t) = 1 + a_1 t + ... with coefficients in a
lambda-ring R, together with the rule (A, x) -> A^x for x in R.  Everything
rests on the lambda-series

    lambda_t(x) = (1 - t)^{-x} = exp(sum_{n>=1} adams(x, n) t^n / n),

the unique series with constant term 1 whose logarithmic derivative is
sum_n adams(x, n) t^{n-1}.  Given lambda_t, any series with constant term 1
decomposes uniquely as an Euler product

    1 + a_1 t + a_2 t^2 + ... = prod_{k>=1} (1 - t^k)^{-b_k},

and the general power is A^x = prod_k (1 - t^k)^{-b_k x}.

Two independent algorithms compute the decomposition exponents b_k:

* ``iterative`` -- strip factors order by order, dividing by
  (1 - t^k)^{-b_k} as soon as b_k becomes visible;
* ``moebius`` -- the closed inversion formula
  n b_n = sum_{d | n} mu(d) adams(c_{n/d}, d), where c_j are the
  logarithmic-derivative coefficients of the input.

Likewise ``power`` has a ``factorize`` route (through the Euler product) and
a ``product`` route, the termwise formula

    A^x = prod_{n>=1} (1 + adams(a_1, n) t^n + adams(a_2, n) t^{2n} + ...)
             ^ { (1/n) sum_{m | n} mu(n/m) adams(x, m) },

whose right-hand powers are plain Q-algebra powers exp(e log).  The two
must agree exactly on every input; the test suite pins this.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

from .arith import divisors, euler_phi, moebius
from .errors import ConstantTermError, PowerStructError
from .rings import LaurentPoly, Rational, adams
from .series import TruncSeries

_ZERO = Rational(0)
_ONE = Rational(1)


def _require_unit_constant(series: TruncSeries, what: str) -> None:
    if not series.coeffs[0] == 1:
        raise ConstantTermError(f"{what} needs constant term 1, got {series.coeffs[0]}")


def lambda_t(x, order: int) -> TruncSeries:
    """The series (1 - t)^{-x} truncated at the given order."""
    log_coeffs = [_ZERO]
    for n in range(1, order + 1):
        log_coeffs.append(Rational(1, n) * adams(x, n))
    return TruncSeries(log_coeffs, order).exp()


def _euler_product(exponents: Sequence, order: int) -> TruncSeries:
    """prod_k (1 - t^k)^{-b_k} computed through one exponential:

    log of the product is sum_n t^n (1/n) sum_{k | n} k adams(b_k, n/k).
    """
    log_coeffs = [_ZERO]
    for n in range(1, order + 1):
        acc = _ZERO
        for k in divisors(n):
            if k > len(exponents):
                break
            b_k = exponents[k - 1]
            if b_k == 0:
                continue
            acc = acc + k * adams(b_k, n // k)
        log_coeffs.append(Rational(1, n) * acc)
    return TruncSeries(log_coeffs, order).exp()


def moebius_exponent(x, n: int):
    """(1/n) sum_{m | n} mu(n/m) adams(x, m), the n-th product exponent."""
    acc = _ZERO
    for m in divisors(n):
        mu = moebius(n // m)
        if mu:
            acc = acc + mu * adams(x, m)
    return Rational(1, n) * acc


@dataclass(frozen=True)
class FactorizationResult:
    """Exponents b_1..b_N with input = prod_k (1 - t^k)^{-b_k}."""

    exponents: tuple

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)


def factorize(series: TruncSeries, algorithm: str = "moebius") -> FactorizationResult:
    """Decompose a constant-term-1 series into prod (1 - t^k)^{-b_k}.

    ``moebius`` uses the closed inversion formula (valid because every ring
    here has multiplicative Adams operations with adams_i o adams_j =
    adams_{ij}); ``iterative`` strips one factor per order.  Division by n in
    the Moebius route happens in the ambient Q-algebra, so exponents may be
    rational even when the input is integral.
    """
    _require_unit_constant(series, "factorize")
    order = series.order
    if algorithm == "moebius":
        log_deriv = series.log_derivative()
        exponents = []
        for n in range(1, order + 1):
            acc = _ZERO
            for d in divisors(n):
                mu = moebius(d)
                if mu:
                    acc = acc + mu * adams(log_deriv[n // d - 1], d)
            exponents.append(Rational(1, n) * acc)
        return FactorizationResult(tuple(exponents))
    if algorithm == "iterative":
        remaining = series
        exponents = []
        for k in range(1, order + 1):
            b_k = remaining.coeffs[k]
            exponents.append(b_k)
            if b_k == 0:
                continue
            factor = lambda_t(b_k, order // k).substitute_tk(k, order)
            remaining = remaining / factor
        return FactorizationResult(tuple(exponents))
    raise ValueError(f"unknown factorize algorithm {algorithm!r}")


def recompose(exponents, order: int) -> TruncSeries:
    """Multiply out prod_k (1 - t^k)^{-b_k} to the given order."""
    if isinstance(exponents, FactorizationResult):
        exponents = exponents.exponents
    return _euler_product(tuple(exponents), order)


def power(base: TruncSeries, exponent, algorithm: str = "factorize") -> TruncSeries:
    """The power-structure value base^exponent.

    ``factorize`` (default) goes through the Euler-product decomposition and
    needs one lambda-series per nonzero factor; ``product`` evaluates the
    termwise Moebius-exponent product with plain exp/log powers.  Both give
    identical results on every input.
    """
    _require_unit_constant(base, "power")
    order = base.order
    if algorithm == "factorize":
        scaled = tuple(b_k * exponent for b_k in factorize(base, "moebius"))
        return _euler_product(scaled, order)
    if algorithm == "product":
        result = TruncSeries.one(order)
        for n in range(1, order + 1):
            exp_n = moebius_exponent(exponent, n)
            if exp_n == 0:
                continue
            # Only the coefficients surviving t -> t^n are twisted; applying
            # adams to the rest could overrun a symmetric-function bound.
            twisted = TruncSeries(
                [adams(c, n) for j, c in enumerate(base.coeffs) if j * n <= order],
                order // n,
            )
            factor = twisted.substitute_tk(n, order)
            result = result * factor.usual_power(exp_n)
        return result
    raise ValueError(f"unknown power algorithm {algorithm!r}")


def binomial_power(a, exponent, order: int) -> TruncSeries:
    """(1 + a t)^exponent via the closed two-term product

    prod_{n>=1} (1 + adams(a, n) t^n)^{(1/n) sum_{m|n} mu(n/m) adams(x, m)}.

    Must equal power(1 + a t, exponent) exactly.
    """
    result = TruncSeries.one(order)
    for n in range(1, order + 1):
        exp_n = moebius_exponent(exponent, n)
        if exp_n == 0:
            continue
        coeffs = [_ONE] + [_ZERO] * (n - 1) + [adams(a, n)]
        factor = TruncSeries(coeffs, order)
        result = result * factor.usual_power(exp_n)
    return result


# -- named identity checks -----------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one named identity check, compared exactly to the order."""

    name: str
    order: int
    holds: bool
    first_discrepancy: dict | None

    def summary(self) -> str:
        if self.holds:
            return f"{self.name}: holds to order {self.order}"
        d = self.first_discrepancy
        return (
            f"{self.name}: FAILS at {d['term']} "
            f"(lhs {d['lhs']}, rhs {d['rhs']}) at order {self.order}"
        )


def _first_series_discrepancy(lhs: TruncSeries, rhs: TruncSeries) -> dict | None:
    for n in range(min(lhs.order, rhs.order) + 1):
        if not lhs.coeffs[n] == rhs.coeffs[n]:
            return {
                "term": "1" if n == 0 else ("t" if n == 1 else f"t^{n}"),
                "lhs": str(lhs.coeffs[n]),
                "rhs": str(rhs.coeffs[n]),
            }
    return None


def _check_exp_moebius(order: int) -> tuple[TruncSeries, TruncSeries]:
    lhs = TruncSeries.t_var(order).exp()
    rhs = TruncSeries.one(order)
    for n in range(1, order + 1):
        mu = moebius(n)
        if not mu:
            continue
        base = TruncSeries([_ONE] + [_ZERO] * (n - 1) + [-_ONE], order)
        rhs = rhs * base.usual_power(Rational(-mu, n))
    return lhs, rhs


def _check_euler_phi(order: int) -> tuple[TruncSeries, TruncSeries]:
    lhs = TruncSeries.one(order)
    for k in range(1, order + 1):
        base = TruncSeries([_ONE] + [_ZERO] * (k - 1) + [-_ONE], order)
        lhs = lhs * base.usual_power(Rational(-euler_phi(k), k))
    # t/(1-t) = t + t^2 + ...
    rhs = TruncSeries([_ZERO] + [_ONE] * order, order).exp()
    return lhs, rhs


def _check_gcd_product(order: int) -> tuple[TruncSeries, TruncSeries]:
    """Literal reading of the coprime-pair product identity.

    Left: prod over coprime (k, m) of (1 - x^k y^m)^{1/k} with rational
    exp/log powers.  Right: (1 - x)^{y/(1-y)} under the polynomial power
    structure, which multiplies out to prod_{k>=1} (1 - x y^k).  Both sides
    are computed as series in x over polynomials in y, truncated at the
    given order in each variable.  This check is a diagnostic: the two sides
    are NOT equal (first difference at x^2*y), and the report says where.
    """

    def trunc_y(poly: LaurentPoly) -> LaurentPoly:
        kept = {e: c for e, c in poly.terms.items() if e[0] <= order}
        return LaurentPoly(poly.vars, kept)

    y = LaurentPoly.var("y")
    one = LaurentPoly.constant(1, ("y",))
    lhs = TruncSeries.constant(one, order)
    for k in range(1, order + 1):
        for m in range(1, order + 1):
            if gcd(k, m) != 1:
                continue
            coeffs = [one] + [LaurentPoly.zero(("y",))] * (k - 1) + [-(y**m)]
            factor = TruncSeries(coeffs, order).usual_power(Rational(1, k))
            lhs = (lhs * factor).map_coeffs(trunc_y)
    rhs = TruncSeries.constant(one, order)
    for k in range(1, order + 1):
        factor = TruncSeries([one, -(y**k)], order)
        rhs = (rhs * factor).map_coeffs(trunc_y)
    return lhs, rhs


def _gcd_product_discrepancy(lhs: TruncSeries, rhs: TruncSeries) -> dict | None:
    for n in range(lhs.order + 1):
        left, right = lhs.coeffs[n], rhs.coeffs[n]
        if left == right:
            continue
        diff = left - right
        y_exp = min(e[0] for e in diff.terms)
        x_part = "1" if n == 0 else ("x" if n == 1 else f"x^{n}")
        y_part = "1" if y_exp == 0 else ("y" if y_exp == 1 else f"y^{y_exp}")
        lhs_c = left.terms.get((y_exp,), _ZERO)
        rhs_c = right.terms.get((y_exp,), _ZERO)
        return {
            "term": f"{x_part}*{y_part}",
            "lhs": str(lhs_c),
            "rhs": str(rhs_c),
        }
    return None


_IDENTITY_CHECKS: dict[str, Callable[[int], tuple[TruncSeries, TruncSeries]]] = {
    "exp_moebius": _check_exp_moebius,
    "euler_phi": _check_euler_phi,
    "gcd_product": _check_gcd_product,
}

IDENTITY_NAMES: tuple[str, ...] = tuple(sorted(_IDENTITY_CHECKS))


def verify_identity(name: str, order: int) -> IdentityReport:
    """Compute both sides of a registered identity and compare exactly."""
    if name not in _IDENTITY_CHECKS:
        raise PowerStructError(
            f"unknown identity {name!r}; known: {', '.join(IDENTITY_NAMES)}"
        )
    lhs, rhs = _IDENTITY_CHECKS[name](order)
    if name == "gcd_product":
        discrepancy = _gcd_product_discrepancy(lhs, rhs)
    else:
        discrepancy = _first_series_discrepancy(lhs, rhs)
    return IdentityReport(name, order, discrepancy is None, discrepancy)
