"""Symmetric functions in the power-sum basis, with polynomial coefficients.

The storage basis is the power sums p_1, p_2, ...: a :class:`SymFunc` maps a
partition (l_1 >= l_2 >= ...) representing the monomial p_{l_1} p_{l_2} ...
to a :class:`LaurentPoly` coefficient.  The power-sum basis is the one in
which both the Adams operations (p_m -> p_{km}) and plethysm
(p_k acts as adams(., k)) are diagonal, which is why it is the storage basis.
Complete homogeneous, elementary and Schur functions exist as conversions.

Every value carries a generator bound K: the largest power-sum index that may
appear.  Operations that would need an index beyond K raise
:class:`GeneratorBoundError` instead of silently truncating.  In practice K
equals the truncation order of the ambient t-series, because p_k only ever
rides along with t^k.

Conventions: h_0 = e_0 = s_() = 1.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Union

from .errors import GeneratorBoundError, HomogeneityError
from .rings import (
    SCALAR_TYPES,
    LaurentPoly,
    Rational,
    Scalar,
    format_rational,
)

_ONE = Rational(1)

Partition = tuple[int, ...]
CoeffLike = Union[int, Fraction, LaurentPoly]


def normalize_partition(parts: Iterable[int]) -> Partition:
    """Sort descending and validate positivity."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] < 1:
        raise ValueError(f"partition parts must be positive, got {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n (descending parts), in descending lex order."""
    if n < 0:
        raise ValueError(f"partitions_of() needs n >= 0, got {n}")
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def z_value(partition: Partition) -> int:
    """The centralizer order z_lambda = prod_i i^{m_i} m_i!."""
    z = 1
    for part in set(partition):
        mult = partition.count(part)
        z *= part**mult * factorial(mult)
    return z


class SpecializationMode(Enum):
    """The three character specializations.

    INVARIANTS sets every p_i to 1 (multiplicity of the trivial character),
    SIGN sets p_i to (-1)^(i-1) (multiplicity of the sign character),
    ORDERED extracts the coefficient of p_1^n and multiplies by n!
    (the virtual dimension; defined for homogeneous inputs of weight n).
    """

    INVARIANTS = "invariants"
    SIGN = "sign"
    ORDERED = "ordered"


class SymFunc:
    """Polynomial in p_1..p_K with LaurentPoly coefficients."""

    __slots__ = ("bound", "vars", "terms")

    def __init__(
        self,
        terms: Mapping[Partition, CoeffLike],
        bound: int,
        vars: Iterable[str] = (),
    ):
        if bound < 0:
            raise ValueError(f"generator bound must be >= 0, got {bound}")
        vars = tuple(vars)
        clean: dict[Partition, LaurentPoly] = {}
        for partition, coeff in terms.items():
            partition = normalize_partition(partition)
            if partition and partition[0] > bound:
                raise GeneratorBoundError(
                    f"p_{partition[0]} exceeds the generator bound {bound}"
                )
            if isinstance(coeff, SCALAR_TYPES):
                coeff = LaurentPoly.constant(coeff, vars)
            elif coeff.vars != vars:
                coeff = coeff._promote(vars) if coeff.vars == () else coeff
                if coeff.vars != vars:
                    raise ValueError(
                        f"coefficient alphabet {coeff.vars} does not match {vars}"
                    )
            if coeff:
                prev = clean.get(partition)
                total = coeff if prev is None else prev + coeff
                if total:
                    clean[partition] = total
                else:
                    del clean[partition]
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def p(cls, index: int, bound: int, vars: Iterable[str] = ()) -> "SymFunc":
        """The power sum p_index."""
        if index < 1:
            raise ValueError(f"power-sum index must be >= 1, got {index}")
        return cls({(index,): _ONE}, bound, vars)

    @classmethod
    def p_monomial(
        cls, partition: Iterable[int], bound: int, vars: Iterable[str] = ()
    ) -> "SymFunc":
        """The product p_{l_1} p_{l_2} ... for a partition (l_1, l_2, ...)."""
        return cls({normalize_partition(partition): _ONE}, bound, vars)

    @classmethod
    def constant(cls, value: CoeffLike, bound: int, vars: Iterable[str] = ()) -> "SymFunc":
        if isinstance(value, LaurentPoly) and value.vars != () and tuple(vars) == ():
            vars = value.vars
        return cls({(): value}, bound, vars)

    @classmethod
    def zero(cls, bound: int, vars: Iterable[str] = ()) -> "SymFunc":
        return cls({}, bound, vars)

    # -- coercion ------------------------------------------------------------

    def _align(self, other) -> tuple["SymFunc", "SymFunc"] | None:
        if isinstance(other, SCALAR_TYPES) or isinstance(other, LaurentPoly):
            other = SymFunc.constant(other, self.bound, getattr(other, "vars", ()))
        if not isinstance(other, SymFunc):
            return None
        a, b = self, other
        if a.vars != b.vars:
            if a.vars == ():
                a = SymFunc({p: c for p, c in a.terms.items()}, a.bound, b.vars)
            elif b.vars == ():
                b = SymFunc({p: c for p, c in b.terms.items()}, b.bound, a.vars)
            else:
                return None
        bound = min(a.bound, b.bound)
        if a.bound != bound:
            a = SymFunc(a.terms, bound, a.vars)
        if b.bound != bound:
            b = SymFunc(b.terms, bound, b.vars)
        return a, b

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms: dict[Partition, LaurentPoly] = dict(a.terms)
        for partition, coeff in b.terms.items():
            prev = terms.get(partition)
            total = coeff if prev is None else prev + coeff
            if total:
                terms[partition] = total
            else:
                terms.pop(partition, None)
        return SymFunc(terms, a.bound, a.vars)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({p: -c for p, c in self.terms.items()}, self.bound, self.vars)

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
        product: dict[Partition, LaurentPoly] = {}
        for pa, ca in a.terms.items():
            for pb, cb in b.terms.items():
                key = tuple(sorted(pa + pb, reverse=True))
                if key and key[0] > a.bound:
                    raise GeneratorBoundError(
                        f"product index p_{key[0]} exceeds the generator bound {a.bound}"
                    )
                coeff = ca * cb
                prev = product.get(key)
                total = coeff if prev is None else prev + coeff
                if total:
                    product[key] = total
                else:
                    del product[key]
        return SymFunc(product, a.bound, a.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("SymFunc exponent must be a non-negative integer")
        result = SymFunc.constant(1, self.bound, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self * (_ONE / Rational(other))
        return NotImplemented

    def __eq__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.terms == b.terms

    def __hash__(self):
        if not self.terms:
            return hash(Rational(0))
        if set(self.terms) == {()}:
            return hash(self.terms[()])
        return hash((self.vars, frozenset((p, c) for p, c in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def max_index(self) -> int:
        """Largest power-sum index present (0 for constants)."""
        return max((p[0] for p in self.terms if p), default=0)

    def invert_unit(self) -> "SymFunc":
        """Inverse of a constant unit (needed as a series leading coefficient)."""
        if set(self.terms) - {()}:
            raise ValueError(f"{self} is not a constant unit")
        coeff = self.terms.get(())
        if coeff is None:
            raise ZeroDivisionError("cannot invert 0")
        return SymFunc.constant(coeff.invert_unit(), self.bound, self.vars)

    def weight(self) -> int:
        """Common weight of all terms; raises unless homogeneous."""
        weights = {sum(p) for p in self.terms}
        if len(weights) > 1:
            raise HomogeneityError(f"{self} is not homogeneous: weights {sorted(weights)}")
        return weights.pop() if weights else 0

    def is_homogeneous(self) -> bool:
        return len({sum(p) for p in self.terms}) <= 1

    def adams(self, k: int) -> "SymFunc":
        """p_m -> p_{km} on indices, adams on every coefficient."""
        if k < 1:
            raise ValueError(f"adams() needs k >= 1, got {k}")
        top = self.max_index()
        if k * top > self.bound:
            raise GeneratorBoundError(
                f"adams({k}) would need p_{k * top} > bound {self.bound}"
            )
        return SymFunc(
            {
                tuple(part * k for part in partition): coeff.adams(k)
                for partition, coeff in self.terms.items()
            },
            self.bound,
            self.vars,
        )

    def coefficient(self, partition: Iterable[int]) -> LaurentPoly:
        return self.terms.get(
            normalize_partition(partition), LaurentPoly.zero(self.vars)
        )

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Partition, LaurentPoly]]:
        """Canonical order: ascending weight, then ascending lex partition."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for partition, coeff in self.sorted_terms():
            monomial = f"p[{','.join(map(str, partition))}]" if partition else ""
            if coeff.is_constant():
                value = coeff.constant_term()
                sign = "-" if value < 0 else "+"
                mag = abs(value)
                if not monomial:
                    body = format_rational(mag)
                elif mag == 1:
                    body = monomial
                else:
                    body = f"{format_rational(mag)}*{monomial}"
            else:
                sign = "+"
                body = f"({coeff})*{monomial}" if monomial else f"({coeff})"
            chunks.append((sign, body))
        sign, body = chunks[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SymFunc({self})"

    def to_json_dict(self) -> dict:
        return {
            "bound": self.bound,
            "vars": list(self.vars),
            "terms": [
                {"p": list(partition), "c": coeff.to_json_dict()}
                for partition, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SymFunc":
        vars = tuple(data["vars"])
        terms = {
            tuple(entry["p"]): LaurentPoly.from_json_dict(entry["c"])
            for entry in data["terms"]
        }
        return cls(terms, int(data["bound"]), vars)


# -- basis conversions -------------------------------------------------------


def _p_expansion_h(k: int, bound: int) -> SymFunc:
    """h_k = sum over partitions of k of p_lambda / z_lambda."""
    return SymFunc(
        {part: Rational(1, z_value(part)) for part in partitions_of(k)}, bound
    )


def _p_expansion_e(k: int, bound: int) -> SymFunc:
    """e_k, the signed variant: coefficient (-1)^(k - length) / z_lambda."""
    return SymFunc(
        {
            part: Rational((-1) ** (k - len(part)), z_value(part))
            for part in partitions_of(k)
        },
        bound,
    )


def _jacobi_trudi(partition: Partition, bound: int) -> SymFunc:
    """s_lambda = det(h_{lambda_i - i + j}) expanded in the p-basis."""
    size = len(partition)
    if size == 0:
        return SymFunc.constant(1, bound)

    def h(k: int) -> SymFunc:
        if k < 0:
            return SymFunc.zero(bound)
        return _p_expansion_h(k, bound)

    matrix = [
        [h(partition[i] - (i + 1) + (j + 1)) for j in range(size)] for i in range(size)
    ]

    # Laplace expansion along the first remaining row, memoized on the
    # surviving column set (partitions here are short, so 2^size is tiny).
    memo: dict[tuple[int, ...], SymFunc] = {}

    def minor(columns: tuple[int, ...]) -> SymFunc:
        if not columns:
            return SymFunc.constant(1, bound)
        if columns in memo:
            return memo[columns]
        row = size - len(columns)
        total = SymFunc.zero(bound)
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if not entry:
                continue
            rest = minor(columns[:position] + columns[position + 1 :])
            term = entry * rest
            total = total + (term if position % 2 == 0 else -term)
        memo[columns] = total
        return total

    return minor(tuple(range(size)))


def basis_in_p(
    basis: str, index: int | Iterable[int], bound: int, vars: Iterable[str] = ()
) -> SymFunc:
    """Expand a named basis element exactly in the p-basis.

    basis 'h' and 'e' take an integer index; 's' takes a partition; 'p' is
    accepted for symmetry and returns the plain power-sum monomial.
    """
    if basis in ("h", "e"):
        if not isinstance(index, int):
            raise TypeError(f"basis {basis!r} takes an integer index")
        if index < 0:
            raise ValueError("index must be >= 0")
        if index > bound:
            raise GeneratorBoundError(f"weight {index} exceeds the bound {bound}")
        f = _p_expansion_h(index, bound) if basis == "h" else _p_expansion_e(index, bound)
    elif basis == "s":
        partition = normalize_partition(
            (index,) if isinstance(index, int) else tuple(index)
        )
        if sum(partition) > bound:
            raise GeneratorBoundError(
                f"weight {sum(partition)} exceeds the bound {bound}"
            )
        f = _jacobi_trudi(partition, bound)
    elif basis == "p":
        partition = normalize_partition(
            (index,) if isinstance(index, int) else tuple(index)
        )
        f = SymFunc.p_monomial(partition, bound)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    if tuple(vars):
        f = SymFunc(f.terms, bound, tuple(vars))
    return f


def _solve_exact(matrix: list[list[Fraction]], rhs: list) -> list:
    """Solve M x = rhs by Gaussian elimination with Fraction pivots.

    The right-hand side entries live in any module over the rationals
    (LaurentPoly in practice); only rational multiples of them are formed.
    """
    size = len(matrix)
    m = [row[:] for row in matrix]
    b = list(rhs)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            raise ValueError("singular conversion matrix (this is a bug)")
        m[col], m[pivot] = m[pivot], m[col]
        b[col], b[pivot] = b[pivot], b[col]
        inv = _ONE / m[col][col]
        m[col] = [inv * entry for entry in m[col]]
        b[col] = inv * b[col]
        for r in range(size):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
                b[r] = b[r] - factor * b[col]
    return b


def p_to_schur(f: SymFunc, weight: int | None = None) -> dict[Partition, LaurentPoly]:
    """Expansion of a homogeneous f over Schur functions of its weight.

    Solves against the Jacobi-Trudi p-expansions of all s_lambda, lambda of
    the given weight.  Zero coefficients are omitted from the result.
    """
    n = f.weight()
    if weight is not None and weight != n:
        raise HomogeneityError(f"input has weight {n}, expected {weight}")
    if n == 0:
        c = f.coefficient(())
        return {(): c} if c else {}
    lambdas = partitions_of(n)
    mus = lambdas
    schur_in_p = {lam: _jacobi_trudi(lam, f.bound) for lam in lambdas}
    matrix = [
        [schur_in_p[lam].coefficient(mu).constant_term() for lam in lambdas]
        for mu in mus
    ]
    rhs = [f.coefficient(mu) for mu in mus]
    solution = _solve_exact(matrix, rhs)
    return {lam: c for lam, c in zip(lambdas, solution) if c}


def schur_expansion_str(expansion: Mapping[Partition, LaurentPoly]) -> str:
    """Canonical text for a Schur expansion, e.g. ``s[2] + s[1,1]``."""
    if not expansion:
        return "0"
    chunks: list[tuple[str, str]] = []
    for partition in sorted(expansion, key=lambda p: (sum(p), p)):
        coeff = expansion[partition]
        monomial = f"s[{','.join(map(str, partition))}]" if partition else "s[]"
        if coeff.is_constant():
            value = coeff.constant_term()
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            body = monomial if mag == 1 else f"{format_rational(mag)}*{monomial}"
        else:
            sign = "+"
            body = f"({coeff})*{monomial}"
        chunks.append((sign, body))
    sign, body = chunks[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


# -- plethysm and specialization ----------------------------------------------


def plethysm_apply(f: SymFunc, x):
    """Plethysm f o x for f with constant rational coefficients.

    Substitutes p_k -> adams(x, k) and extends as a ring map in f.  x may be
    any lambda-ring element (rational, polynomial, graded, or symmetric
    function); the result lives where x does.
    """
    from .rings import adams as adams_op

    result = None
    for partition, coeff in f.terms.items():
        if not coeff.is_constant():
            raise ValueError(
                f"plethysm needs constant coefficients, found {coeff} at p{list(partition)}"
            )
        term = coeff.constant_term()
        for part in partition:
            term = term * adams_op(x, part)
        result = term if result is None else result + term
    if result is None:
        return Rational(0) * x if not isinstance(x, SCALAR_TYPES) else Rational(0)
    return result


def specialize(f: SymFunc, mode: SpecializationMode) -> LaurentPoly:
    """Apply one of the three character specializations; see
    :class:`SpecializationMode`."""
    if mode is SpecializationMode.INVARIANTS:
        total = LaurentPoly.zero(f.vars)
        for coeff in f.terms.values():
            total = total + coeff
        return total
    if mode is SpecializationMode.SIGN:
        total = LaurentPoly.zero(f.vars)
        for partition, coeff in f.terms.items():
            sign = (-1) ** (sum(partition) - len(partition))
            total = total + (coeff if sign > 0 else -coeff)
        return total
    if mode is SpecializationMode.ORDERED:
        n = f.weight()
        coeff = f.coefficient((1,) * n)
        return factorial(n) * coeff
    raise ValueError(f"unknown specialization mode {mode!r}")
