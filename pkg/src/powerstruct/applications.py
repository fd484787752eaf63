"""Worked computations built on the power-structure core.

Everything here is a generating-function computation over the polynomial
images of geometric classes: varieties enter only through polynomials in the
affine-line class L (or in the Hodge variables u, v), never as geometry.

* irreducible polynomials: the projectivized space of degree-N polynomials in
  a fixed number of variables factors as an Euler product over the
  irreducible classes, so Moebius inversion of its logarithmic derivative
  recovers [Irr_n] exactly;
* configuration spaces: the equivariant character series of ordered
  point-tuples on X is (1 + p_1 t)^{e_X}, and its three character
  specializations give unordered, sign-twisted and ordered counts;
* finite quotients: averaging twisted products over conjugacy classes gives
  the equivariant Euler characteristics of configuration spaces modulo a
  finite group action, with the ten built-in strata of the genus-2 moduli
  computation as the flagship instance;
* the orbifold Euler characteristic of the moduli of genus-g curves with n
  marked points, from Bernoulli numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Sequence

from .arith import bernoulli, divisors, moebius
from .errors import IntegralityError, PowerStructError
from .power import lambda_t, power
from .rings import LaurentPoly
from .series import TruncSeries
from .symfunc import SymFunc

_L = LaurentPoly.var("L")
_UV = LaurentPoly.var("u", ("u", "v")) * LaurentPoly.var("v", ("u", "v"))


def _over_symfunc(series: TruncSeries, bound: int, vars=()) -> TruncSeries:
    """Promote every coefficient (scalars included) to a SymFunc."""
    zero = SymFunc.zero(bound, vars)
    return series.map_coeffs(lambda c: c + zero)


def _over_poly(series: TruncSeries, vars) -> TruncSeries:
    zero = LaurentPoly.zero(vars)
    return series.map_coeffs(lambda c: c + zero)


def poly_space_class(n_vars: int, degree: int) -> LaurentPoly:
    """Class of the projectivized space of degree-``degree`` polynomials in
    ``n_vars`` variables: (L^D(N) - L^D(N-1)) / (L - 1), where D(M) is the
    dimension C(n_vars + M, n_vars) of the space of polynomials of degree
    at most M."""
    if n_vars < 1 or degree < 1:
        raise ValueError("poly_space_class needs n_vars >= 1 and degree >= 1")

    def dim(m: int) -> int:
        return comb(n_vars + m, n_vars)

    numerator = _L ** dim(degree) - _L ** dim(degree - 1)
    return numerator.exact_div(_L - 1)


def poly_space_series(n_vars: int, order: int) -> TruncSeries:
    """1 + sum_N [space of degree-N polynomials] t^N, truncated."""
    coeffs = [LaurentPoly.constant(1, ("L",))]
    for n in range(1, order + 1):
        coeffs.append(poly_space_class(n_vars, n))
    return TruncSeries(coeffs, order)


def irreducible_class(n_vars: int, degree: int) -> LaurentPoly:
    """Class of the projectivized variety of irreducible degree-``degree``
    polynomials in ``n_vars`` variables.

    The full polynomial-space series is an Euler product over the
    irreducible classes, so n [Irr_n] = sum_{d | n} mu(d) c_{n/d}(L^d) with
    c_j the logarithmic-derivative coefficients.  The Moebius sum must be
    exactly divisible by n; anything else raises IntegralityError.
    """
    if n_vars < 1 or degree < 1:
        raise ValueError("irreducible_class needs n_vars >= 1 and degree >= 1")
    log_deriv = poly_space_series(n_vars, degree).log_derivative()
    acc = LaurentPoly.zero(("L",))
    for d in divisors(degree):
        mu = moebius(d)
        if mu:
            acc = acc + mu * log_deriv[degree // d - 1].adams(d)
    for exps, coeff in acc.terms.items():
        if (coeff / degree).denominator != 1:
            raise IntegralityError(
                f"Moebius sum for degree {degree} is not divisible by {degree} "
                f"at L^{exps[0]} (coefficient {coeff})"
            )
    return acc * Fraction(1, degree)


def irreducible_specialize(n_vars: int, degree: int, target: str) -> LaurentPoly:
    """Specialized irreducible class: ``hodge_deligne`` maps L -> uv,
    ``euler`` maps L -> 1."""
    cls = irreducible_class(n_vars, degree)
    if target == "hodge_deligne":
        return cls.substitute({"L": _UV})
    if target == "euler":
        return cls.substitute({"L": 1})
    raise ValueError(f"unknown target {target!r}; use 'hodge_deligne' or 'euler'")


def config_space_series(
    x_class: LaurentPoly, order: int, bound: int | None = None
) -> TruncSeries:
    """(1 + p_1 t)^{x_class}: the equivariant character series of ordered
    point configurations on a space with the given class.

    The t^n coefficient is a symmetric function of weight n whose character
    specializations count unordered (invariants), sign-twisted (sign) and
    ordered (ordered) configurations.
    """
    if bound is None:
        bound = max(order, 1)
    one = SymFunc.constant(1, bound, x_class.vars)
    if order == 0:
        return TruncSeries([one], 0)
    base = TruncSeries([one, SymFunc.p(1, bound, x_class.vars)], order)
    result = power(base, SymFunc.constant(x_class, bound))
    return _over_symfunc(result, bound, x_class.vars)


def unordered_config_product(
    betti: Sequence[int], order: int, signed: bool = False
) -> TruncSeries:
    """Unordered-configuration series of a space with the given Betti numbers,
    computed two ways and cross-checked.

    The class is P = sum_k (-1)^k b_k q^k.  Unsigned: (1 + t)^P under the
    power structure, equal to the explicit product
    prod_k ((1 - t^2 q^k)/(1 - t q^k))^{(-1)^k b_k}.  Signed: (1 - u)^P with
    u -> -t, equal to prod_k (1 + t q^k)^{(-1)^k b_k}.  A mismatch between
    the two routes raises (it would mean an internal inconsistency).
    """
    q = LaurentPoly.var("q")
    one = LaurentPoly.constant(1, ("q",))
    zero = LaurentPoly.zero(("q",))
    p_class = zero
    for k, b in enumerate(betti):
        p_class = p_class + ((-1) ** k * b) * q**k

    if not signed:
        route_power = power(TruncSeries([one, one], order), p_class)
        route_product = TruncSeries.constant(one, order)
        for k, b in enumerate(betti):
            s = (-1) ** k * b
            if s == 0:
                continue
            two_t = TruncSeries([one, zero, -(q**k)], order)
            one_t = TruncSeries([one, -(q**k)], order)
            route_product = route_product * two_t**s * one_t ** (-s)
    else:
        flipped = power(TruncSeries([one, -one], order), p_class)
        route_power = TruncSeries(
            [c if n % 2 == 0 else -c for n, c in enumerate(flipped.coeffs)], order
        )
        route_product = TruncSeries.constant(one, order)
        for k, b in enumerate(betti):
            s = (-1) ** k * b
            if s == 0:
                continue
            route_product = route_product * TruncSeries([one, q**k], order) ** s
    route_power = _over_poly(route_power, ("q",))
    route_product = _over_poly(route_product, ("q",))
    if route_power != route_product:
        raise PowerStructError(
            "power-structure and explicit-product routes disagree (internal bug)"
        )
    return route_power


# -- finite group actions ------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClassData:
    """One conjugacy class of the acting group.

    ``orbit_euler`` maps an orbit length k to the Euler characteristic of the
    locus of points whose orbit under a representative has exactly k points.
    """

    size: int
    orbit_euler: Mapping[int, int]
    identity: bool = False

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"class size must be >= 1, got {self.size}")
        cleaned = {}
        for k, chi in self.orbit_euler.items():
            k = int(k)
            if k < 1:
                raise ValueError(f"orbit length must be >= 1, got {k}")
            cleaned[k] = int(chi)
        object.__setattr__(self, "orbit_euler", cleaned)
        if self.identity:
            if self.size != 1:
                raise ValueError("the identity class must have size 1")
            if set(k for k, chi in cleaned.items() if chi) - {1}:
                raise ValueError(
                    "the identity fixes everything: its orbit_euler must be "
                    "supported at k = 1"
                )


@dataclass(frozen=True)
class GroupActionData:
    """Summary of a finite group action: per conjugacy class, the Euler
    characteristics of the orbit-length strata."""

    group_order: int
    classes: tuple[ConjugacyClassData, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        if self.group_order < 1:
            raise ValueError(f"group order must be >= 1, got {self.group_order}")
        if not self.classes:
            raise ValueError("an action needs at least one conjugacy class")
        if sum(c.size for c in self.classes) != self.group_order:
            raise ValueError(
                f"class sizes {[c.size for c in self.classes]} do not add up "
                f"to the group order {self.group_order}"
            )
        if sum(1 for c in self.classes if c.identity) != 1:
            raise ValueError("exactly one class must be marked as the identity")

    @property
    def total_euler(self) -> int:
        """Euler characteristic of the whole space, read off the identity class."""
        identity = next(c for c in self.classes if c.identity)
        return identity.orbit_euler.get(1, 0)

    def to_json_dict(self) -> dict:
        out_classes = []
        for c in self.classes:
            entry: dict = {"size": c.size}
            if c.identity:
                entry["identity"] = True
            entry["orbit_euler"] = {
                str(k): chi for k, chi in sorted(c.orbit_euler.items())
            }
            out_classes.append(entry)
        return {"group_order": self.group_order, "classes": out_classes}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "GroupActionData":
        classes = tuple(
            ConjugacyClassData(
                size=int(entry["size"]),
                orbit_euler={int(k): int(v) for k, v in entry["orbit_euler"].items()},
                identity=bool(entry.get("identity", False)),
            )
            for entry in data["classes"]
        )
        return cls(group_order=int(data["group_order"]), classes=classes)


def quotient_euler_series(action: GroupActionData, order: int) -> TruncSeries:
    """Equivariant Euler-characteristic series of point configurations on the
    quotient by the action:

        sum_n t^n chi^{S_n}(F(X, n) / G)
          = (1/|G|) sum_g prod_k (1 + p_k t^k)^{chi(X_k(g)) / k}.

    Coefficients are symmetric functions with rational coefficients; the
    per-class powers are plain exp/log powers with rational exponents.
    """
    bound = max(order, 1)
    total = TruncSeries.constant(Fraction(0), order)
    for cls in action.classes:
        prod = TruncSeries.one(order)
        for k, chi in sorted(cls.orbit_euler.items()):
            if chi == 0 or k > order:
                continue
            coeffs = (
                [SymFunc.constant(1, bound)]
                + [SymFunc.zero(bound)] * (k - 1)
                + [SymFunc.p(k, bound)]
            )
            base = TruncSeries(coeffs, order)
            prod = prod * base.usual_power(Fraction(chi, k))
        total = total + prod.scale(Fraction(cls.size))
    return _over_symfunc(total.scale(Fraction(1, action.group_order)), bound)


def quotient_euler_egf(action: GroupActionData, order: int) -> TruncSeries:
    """Exponential generating function of the plain Euler characteristics:

        sum_n (t^n / n!) chi(F(X, n) / G)
          = (1/|G|) sum_g (1 + t)^{chi(X_1(g))},

    with plain rational powers."""
    total = TruncSeries.constant(Fraction(0), order)
    one_plus_t = TruncSeries([Fraction(1), Fraction(1)], order)
    for cls in action.classes:
        fixed = cls.orbit_euler.get(1, 0)
        term = one_plus_t.usual_power(Fraction(fixed))
        total = total + term.scale(Fraction(cls.size))
    return total.scale(Fraction(1, action.group_order))


# -- hyperelliptic curves and genus-2 moduli ------------------------------------


def hyperelliptic_class(genus: int, target: str = "class") -> LaurentPoly:
    """Class of the moduli space of genus-``genus`` hyperelliptic curves.

    The coefficient of t^(2g+2) in (1 + t)^{1 + L} counts unordered
    (2g+2)-tuples of distinct points on the projective line; dividing by the
    automorphism class [PGL_2] = L^3 - L gives L^{2g-1}.  The division is
    exact by construction; a remainder would signal a regression.

    ``target='hodge_deligne'`` maps L -> uv, giving (uv)^{2g-1} (of total
    degree 4g - 2).
    """
    if genus < 2:
        raise ValueError(f"hyperelliptic_class needs genus >= 2, got {genus}")
    order = 2 * genus + 2
    series = power(TruncSeries([Fraction(1), Fraction(1)], order), 1 + _L)
    numerator = series.coeffs[order]
    cls = numerator.exact_div(_L**3 - _L)
    if target == "class":
        return cls
    if target == "hodge_deligne":
        return cls.substitute({"L": _UV})
    raise ValueError(f"unknown target {target!r}; use 'class' or 'hodge_deligne'")


@dataclass(frozen=True)
class ModuliStratum:
    """One symmetry stratum of the genus-2 moduli computation: a rational
    prefactor times a product of factors (1 + p_k t^k)^exponent."""

    prefactor: Fraction
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for k, _ in self.factors:
            if k < 1:
                raise ValueError(f"factor index must be >= 1, got {k}")


# The ten strata of curves with extra symmetries, classified by the symmetry
# type of the six branch points on the projective line.
GENUS2_STRATA: tuple[ModuliStratum, ...] = (
    ModuliStratum(Fraction(-1, 240), ((1, -2),)),
    ModuliStratum(Fraction(-1, 240), ((1, 6), (2, -4))),
    ModuliStratum(Fraction(2, 5), ((1, 3), (5, -1))),
    ModuliStratum(Fraction(2, 5), ((1, 1), (2, 1), (5, 1), (10, -1))),
    ModuliStratum(Fraction(1, 6), ((1, 2), (2, 1), (6, -1))),
    ModuliStratum(Fraction(-1, 12), ((1, 4), (3, -2))),
    ModuliStratum(Fraction(-1, 12), ((2, 2), (3, 2), (6, -2))),
    ModuliStratum(Fraction(1, 12), ((1, 2), (2, -2))),
    ModuliStratum(Fraction(1, 4), ((1, 2), (4, 1), (8, -1))),
    ModuliStratum(Fraction(-1, 8), ((1, 2), (2, 2), (4, -2))),
)


def moduli_g2_series(order: int, bound: int | None = None) -> TruncSeries:
    """Equivariant Euler-characteristic series of the moduli of genus-2
    curves with marked points: sum over the built-in symmetry strata of
    prefactor * prod (1 + p_k t^k)^exponent."""
    if bound is None:
        bound = max(order, 1)
    total = TruncSeries.constant(Fraction(0), order)
    for stratum in GENUS2_STRATA:
        prod = TruncSeries.one(order)
        for k, exponent in stratum.factors:
            if k > order:
                continue
            coeffs = (
                [SymFunc.constant(1, bound)]
                + [SymFunc.zero(bound)] * (k - 1)
                + [SymFunc.p(k, bound)]
            )
            prod = prod * TruncSeries(coeffs, order).usual_power(exponent)
        total = total + prod.scale(stratum.prefactor)
    return _over_symfunc(total, bound)


def harer_zagier(genus: int, marked: int) -> Fraction:
    """Orbifold Euler characteristic of the moduli of genus-``genus`` curves
    with ``marked`` marked points:

        (-1)^n (2g - 3 + n)! (2g - 1) / (2g)! * B_{2g}.
    """
    if genus < 1:
        raise ValueError(f"harer_zagier needs genus >= 1, got {genus}")
    if marked < 0:
        raise ValueError(f"marked point count must be >= 0, got {marked}")
    if 2 * genus - 3 + marked < 0:
        raise ValueError(
            f"need 2*genus - 3 + marked >= 0, got {2 * genus - 3 + marked}"
        )
    sign = -1 if marked % 2 else 1
    return (
        sign
        * Fraction(factorial(2 * genus - 3 + marked) * (2 * genus - 1), factorial(2 * genus))
        * bernoulli(2 * genus)
    )
