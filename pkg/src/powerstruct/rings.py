"""Exact coefficient rings and the Adams-operation interface.

Two kinds of scalars run through the whole package:

* ``Rational`` -- arbitrary-precision exact rationals, always in lowest
  terms with a positive denominator (``gmpy2.mpq`` when available, else
  ``fractions.Fraction``; the two mix freely).  There is no floating point
  anywhere.
* ``LaurentPoly`` -- sparse multivariate Laurent polynomial over ``Rational``
  in a fixed, ordered variable alphabet.  Exponents may be negative so that
  intermediate quotients such as (L^a - L^b)/(L - 1) stay inside the ring.

A *lambda-ring element* here is any value supporting ring arithmetic plus
``adams(k)`` for k >= 1.  The module-level :func:`adams` dispatches:

* rationals and integers: identity (the trivial lambda-structure on Q),
* ``LaurentPoly``: every variable exponent is multiplied by k,
* ``GradedAdamsElement``: the degree-j component is scaled by k^j.

All values are immutable after construction; every operation is pure, so
values can be shared freely.

Canonical form
--------------
Term maps never store zero coefficients, and serialization orders terms by
descending lexicographic exponent tuple, e.g. ``L^5 - L^2``.  The JSON form
is ``{"vars": ["L"], "terms": [{"e": [5], "c": "1"}, {"e": [2], "c": "-1"}]}``
with coefficients rendered as ``num/den`` strings (``den`` omitted when 1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    AlphabetMismatchError,
    InexactDivisionError,
    SubstitutionError,
)

# gmpy2's exact rational is arithmetic-compatible with fractions.Fraction
# (same text form, same hash, same lowest-terms/positive-denominator
# invariants) but an order of magnitude faster; fall back to Fraction when
# it is not installed.  Either type may appear anywhere a scalar is accepted.
try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    Rational = Fraction

SCALAR_TYPES: tuple = tuple({int, Fraction, type(Rational(1))})
Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

_ZERO = Rational(0)
_ONE = Rational(1)


def _as_rational(value):
    if type(value) is type(_ZERO):
        return value
    if isinstance(value, SCALAR_TYPES):
        return Rational(value)
    raise TypeError(f"expected an exact rational, got {value!r}")


def format_rational(value) -> str:
    """Render a rational as ``num`` or ``num/den``."""
    return str(value)


def parse_rational(text: str):
    """Parse the ``num`` / ``num/den`` form produced by :func:`format_rational`."""
    return Rational(text)


class LaurentPoly:
    """Multivariate Laurent polynomial with Rational coefficients.

    ``vars`` is the ordered variable alphabet, fixed at construction;
    combining values over different non-empty alphabets raises
    :class:`AlphabetMismatchError`.  The empty alphabet plays the role of a
    plain scalar and promotes freely.  Arithmetic accepts ``int`` and
    ``Fraction`` on either side.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Mapping[Exponents, Scalar]):
        vars = tuple(vars)
        width = len(vars)
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError(
                    f"exponent tuple {exps} does not match alphabet {vars}"
                )
            coeff = _as_rational(coeff)
            if coeff:
                clean[exps] = clean.get(exps, _ZERO) + coeff
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponents, Fraction]) -> "LaurentPoly":
        """Internal: build from an already-canonical term map (no zeros,
        exact Fractions, correct tuple widths)."""
        self = object.__new__(cls)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def constant(cls, value: Scalar, vars: Iterable[str] = ()) -> "LaurentPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): _as_rational(value)})

    @classmethod
    def var(cls, name: str, vars: Iterable[str] | None = None) -> "LaurentPoly":
        """The polynomial consisting of the single variable ``name``."""
        vars = (name,) if vars is None else tuple(vars)
        if name not in vars:
            raise ValueError(f"variable {name!r} is not in alphabet {vars}")
        exps = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {exps: _ONE})

    @classmethod
    def zero(cls, vars: Iterable[str] = ()) -> "LaurentPoly":
        return cls(vars, {})

    # -- coercion ----------------------------------------------------------

    def _promote(self, vars: tuple[str, ...]) -> "LaurentPoly":
        """Re-express a constant (empty-alphabet) value over ``vars``."""
        if self.vars == vars:
            return self
        if self.vars != ():
            raise AlphabetMismatchError(
                f"cannot combine alphabets {self.vars} and {vars}"
            )
        coeff = self.terms.get((), _ZERO)
        return LaurentPoly.constant(coeff, vars)

    def _align(self, other) -> tuple["LaurentPoly", "LaurentPoly"] | None:
        """Coerce the pair to a common alphabet, or None if not a known scalar."""
        if isinstance(other, SCALAR_TYPES):
            other = LaurentPoly.constant(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return None
        if self.vars == other.vars:
            return self, other
        if self.vars == ():
            return self._promote(other.vars), other
        return self, other._promote(self.vars)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            total = terms.get(exps, _ZERO) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return LaurentPoly._raw(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if len(a.terms) > len(b.terms):
            a, b = b, a
        product: dict[Exponents, Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                total = product.get(exps, _ZERO) + ca * cb
                if total:
                    product[exps] = total
                else:
                    del product[exps]
        return LaurentPoly._raw(a.vars, product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self * (_ONE / _as_rational(other))
        if isinstance(other, LaurentPoly):
            return self.exact_div(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return LaurentPoly.constant(other, self.vars).exact_div(self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("polynomial exponent must be an integer")
        if n < 0:
            return self.invert_unit() ** (-n)
        result = LaurentPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.terms == b.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), _ZERO)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_term()

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def invert_unit(self) -> "LaurentPoly":
        """Inverse of a unit (a single-term Laurent monomial)."""
        if not self.is_monomial():
            raise InexactDivisionError(f"{self} is not an invertible monomial")
        ((exps, coeff),) = self.terms.items()
        return LaurentPoly(self.vars, {tuple(-e for e in exps): _ONE / coeff})

    def is_integral(self) -> bool:
        """True when all exponents are >= 0 and all coefficients are integers."""
        return all(
            all(e >= 0 for e in exps) and coeff.denominator == 1
            for exps, coeff in self.terms.items()
        )

    # -- exact division ----------------------------------------------------

    def exact_div(self, other) -> "LaurentPoly":
        """Exact quotient self/other in the Laurent polynomial ring.

        Raises :class:`InexactDivisionError` when other does not divide self.
        Never truncates.
        """
        pair = self._align(other)
        if pair is None:
            raise TypeError(f"cannot divide by {other!r}")
        a, b = pair
        if not b.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not a.terms:
            return LaurentPoly.zero(a.vars)
        width = len(a.vars)
        # The quotient's per-variable support is pinned: over an integral
        # domain, min/max exponents are additive under multiplication.
        lo = tuple(
            min(e[i] for e in a.terms) - min(e[i] for e in b.terms)
            for i in range(width)
        )
        hi = tuple(
            max(e[i] for e in a.terms) - max(e[i] for e in b.terms)
            for i in range(width)
        )
        if any(l > h for l, h in zip(lo, hi)):
            raise InexactDivisionError(f"({a}) is not divisible by ({b})")
        lead_b = max(b.terms)
        lead_b_coeff = b.terms[lead_b]
        remainder = dict(a.terms)
        quotient: dict[Exponents, Fraction] = {}
        while remainder:
            lead_r = max(remainder)
            exps = tuple(x - y for x, y in zip(lead_r, lead_b))
            if any(e < l or e > h for e, l, h in zip(exps, lo, hi)):
                raise InexactDivisionError(f"({a}) is not divisible by ({b})")
            coeff = remainder[lead_r] / lead_b_coeff
            quotient[exps] = coeff
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(exps, eb))
                total = remainder.get(key, _ZERO) - coeff * cb
                if total:
                    remainder[key] = total
                else:
                    remainder.pop(key, None)
        return LaurentPoly(a.vars, quotient)

    # -- substitution and Adams -------------------------------------------

    def substitute(self, mapping: Mapping[str, "LaurentPoly | Scalar"]) -> "LaurentPoly":
        """Substitute a value for every variable.

        Every variable of the alphabet must be mapped.  A value raised to a
        negative exponent must be a unit monomial.  All non-constant values
        must share one alphabet, which becomes the result's alphabet.
        """
        missing = [v for v in self.vars if v not in mapping]
        if missing:
            raise SubstitutionError(f"no substitution given for {missing}")
        values: list[LaurentPoly] = []
        target: tuple[str, ...] = ()
        for name in self.vars:
            value = mapping[name]
            if isinstance(value, SCALAR_TYPES):
                value = LaurentPoly.constant(value)
            if value.vars != ():
                if target == ():
                    target = value.vars
                elif value.vars != target:
                    raise AlphabetMismatchError(
                        f"substitution values mix alphabets {target} and {value.vars}"
                    )
            values.append(value)
        values = [value._promote(target) for value in values]
        result = LaurentPoly.zero(target)
        for exps, coeff in self.terms.items():
            term = LaurentPoly.constant(coeff, target)
            for value, e in zip(values, exps):
                if e == 0:
                    continue
                if e < 0 and not value.is_monomial():
                    raise SubstitutionError(
                        f"cannot raise non-unit {value} to negative exponent {e}"
                    )
                term = term * value**e
            result = result + term
        return result

    def adams(self, k: int) -> "LaurentPoly":
        """k-th Adams operation: each variable exponent multiplied by k."""
        if k < 1:
            raise ValueError(f"adams() needs k >= 1, got {k}")
        if k == 1:
            return self
        return LaurentPoly._raw(
            self.vars,
            {tuple(e * k for e in exps): c for exps, c in self.terms.items()},
        )

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical order: descending lexicographic exponent tuple."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def _format_monomial(self, exps: Exponents) -> str:
        parts = []
        for name, e in zip(self.vars, exps):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for exps, coeff in self.sorted_terms():
            monomial = self._format_monomial(exps)
            mag = abs(coeff)
            if not monomial:
                body = format_rational(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{format_rational(mag)}*{monomial}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"e": list(exps), "c": format_rational(coeff)}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        vars = tuple(data["vars"])
        terms = {
            tuple(entry["e"]): parse_rational(entry["c"]) for entry in data["terms"]
        }
        return cls(vars, terms)


class GradedAdamsElement:
    """Finitely supported element of a graded Q-algebra.

    The degree-j component is a rational; multiplication adds degrees.
    ``adams(k)`` scales the degree-j component by k^j.
    """

    __slots__ = ("components",)

    def __init__(self, components: Mapping[int, Scalar]):
        clean: dict[int, Fraction] = {}
        for degree, coeff in components.items():
            if degree < 0:
                raise ValueError(f"negative degree {degree}")
            coeff = _as_rational(coeff)
            if coeff:
                clean[int(degree)] = clean.get(int(degree), _ZERO) + coeff
                if not clean[int(degree)]:
                    del clean[int(degree)]
        object.__setattr__(self, "components", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedAdamsElement is immutable")

    def _coerce(self, other) -> "GradedAdamsElement | None":
        if isinstance(other, SCALAR_TYPES):
            return GradedAdamsElement({0: other})
        if isinstance(other, GradedAdamsElement):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.components)
        for degree, coeff in other.components.items():
            total = merged.get(degree, _ZERO) + coeff
            if total:
                merged[degree] = total
            else:
                merged.pop(degree, None)
        return GradedAdamsElement(merged)

    __radd__ = __add__

    def __neg__(self):
        return GradedAdamsElement({d: -c for d, c in self.components.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: dict[int, Fraction] = {}
        for da, ca in self.components.items():
            for db, cb in other.components.items():
                total = product.get(da + db, _ZERO) + ca * cb
                if total:
                    product[da + db] = total
                else:
                    del product[da + db]
        return GradedAdamsElement(product)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def __bool__(self):
        return bool(self.components)

    def adams(self, k: int) -> "GradedAdamsElement":
        if k < 1:
            raise ValueError(f"adams() needs k >= 1, got {k}")
        return GradedAdamsElement(
            {d: c * Rational(k) ** d for d, c in self.components.items()}
        )

    def component_sum(self):
        return sum(self.components.values(), _ZERO)

    def __str__(self):
        if not self.components:
            return "0"
        return " + ".join(
            f"{format_rational(c)}*deg[{d}]" for d, c in sorted(self.components.items())
        )

    def __repr__(self):
        return f"GradedAdamsElement({dict(sorted(self.components.items()))})"


def adams(x, k: int):
    """k-th Adams operation on any supported lambda-ring element.

    Rationals carry the trivial lambda-structure, so adams is the identity
    there; everything else delegates to the value's own ``adams`` method.
    """
    if k < 1:
        raise ValueError(f"adams() needs k >= 1, got {k}")
    if isinstance(x, SCALAR_TYPES):
        return _as_rational(x)
    return x.adams(k)
