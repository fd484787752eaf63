"""Truncated formal power series in t over an exact Q-algebra.

A :class:`TruncSeries` carries a hard truncation order N and exactly N+1
coefficients.  Arithmetic never pretends precision beyond N: combining two
series truncates to the smaller order, and nothing is ever zero-padded
implicitly.  Coefficients may be rationals, Laurent polynomials, symmetric
functions or graded elements; mixed scalars are reconciled through the
coefficient classes' own coercion.

The derivative is taken by shifting indices down; no symbolic t is ever
materialized.  Logarithm and exponential use the standard exact recurrences
(all coefficient rings here are Q-algebras, so division by integers is
always available).
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import ConstantTermError
from .rings import SCALAR_TYPES, LaurentPoly, Rational, format_rational

_ZERO = Rational(0)
_ONE = Rational(1)


def _invert_leading(value):
    """Inverse of a series' constant term, when it is a unit."""
    if isinstance(value, SCALAR_TYPES):
        if not value:
            raise ConstantTermError("leading coefficient 0 is not invertible")
        return _ONE / value
    if value == 1:
        return _ONE
    invert = getattr(value, "invert_unit", None)
    if invert is not None:
        try:
            return invert()
        except Exception as exc:
            raise ConstantTermError(f"leading coefficient {value} is not a unit") from exc
    raise ConstantTermError(f"leading coefficient {value} is not invertible")


class TruncSeries:
    """Formal power series 1-dimensional in t, exact through order N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("a series needs an order or at least one coefficient")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [_ZERO] * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([_ONE], order)

    @classmethod
    def t_var(cls, order: int) -> "TruncSeries":
        """The series t itself (order must be >= 1 to see it)."""
        return cls([_ZERO, _ONE], order)

    # -- basic arithmetic ----------------------------------------------------

    def _common_order(self, other: "TruncSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            n = self._common_order(other)
            return TruncSeries(
                [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])], n
            )
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + other
        return TruncSeries(coeffs, self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return self + (-other)
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] - other
        return TruncSeries(coeffs, self.order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        n = self._common_order(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for m in range(n + 1):
            acc = a[0] * b[m]
            for k in range(1, m + 1):
                acc = acc + a[k] * b[m - k]
            out.append(acc)
        return TruncSeries(out, n)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor) -> "TruncSeries":
        """Multiply every coefficient by a ring element."""
        return TruncSeries([factor * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            inv = _invert_leading(other)
            return self.scale(inv)
        n = self._common_order(other)
        inv = _invert_leading(other.coeffs[0])
        a, b = self.coeffs, other.coeffs
        out = [a[0] * inv]
        for m in range(1, n + 1):
            acc = a[m]
            for k in range(1, m + 1):
                acc = acc - b[k] * out[m - k]
            out.append(acc * inv)
        return TruncSeries(out, n)

    def __rtruediv__(self, other):
        return TruncSeries.constant(other, self.order) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("series exponent must be an integer; use usual_power")
        if n < 0:
            return (TruncSeries.one(self.order) / self) ** (-n)
        result = TruncSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- calculus ------------------------------------------------------------

    def map_coeffs(self, fn: Callable) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncSeries(self.coeffs[: order + 1], order)

    def derivative(self) -> "TruncSeries":
        """d/dt, one order shorter (indices shift down)."""
        if self.order == 0:
            return TruncSeries([_ZERO], 0)
        return TruncSeries(
            [k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1
        )

    def log(self) -> "TruncSeries":
        """Truncated logarithm; requires constant term 1."""
        if not self.coeffs[0] == 1:
            raise ConstantTermError(f"log needs constant term 1, got {self.coeffs[0]}")
        if self.order == 0:
            return TruncSeries([_ZERO], 0)
        dlog = self.derivative() / self.truncate(self.order - 1)
        out = [_ZERO]
        for n in range(1, self.order + 1):
            out.append(Rational(1, n) * dlog.coeffs[n - 1])
        return TruncSeries(out, self.order)

    def exp(self) -> "TruncSeries":
        """Truncated exponential; requires constant term 0."""
        if not self.coeffs[0] == 0:
            raise ConstantTermError(f"exp needs constant term 0, got {self.coeffs[0]}")
        out = [_ONE]
        b = self.coeffs
        for n in range(1, self.order + 1):
            acc = b[1] * out[n - 1]
            for k in range(2, n + 1):
                acc = acc + (k * b[k]) * out[n - k]
            out.append(Rational(1, n) * acc)
        return TruncSeries(out, self.order)

    def log_derivative(self) -> list:
        """Coefficients C_1..C_N with A'/A = sum C_n t^(n-1); requires a_0 = 1."""
        if not self.coeffs[0] == 1:
            raise ConstantTermError(
                f"log_derivative needs constant term 1, got {self.coeffs[0]}"
            )
        if self.order == 0:
            return []
        ratio = self.derivative() / self.truncate(self.order - 1)
        return list(ratio.coeffs)

    def usual_power(self, exponent) -> "TruncSeries":
        """exp(exponent * log(self)): the plain Q-algebra power."""
        return self.log().scale(exponent).exp()

    def substitute_tk(self, k: int, order: int | None = None) -> "TruncSeries":
        """Substitute t -> t^k: coefficient a_j moves to position j*k.

        The result is exact through (order+1)*k - 1, since positions that are
        not multiples of k are genuinely zero; the default result order is
        that bound.  Asking for more raises (it would pretend precision).
        """
        if k < 1:
            raise ValueError(f"substitute_tk needs k >= 1, got {k}")
        limit = (self.order + 1) * k - 1
        if order is None:
            order = limit
        if order > limit:
            raise ValueError(
                f"substituting t^{k} into a series of order {self.order} is only "
                f"exact through order {limit}, not {order}"
            )
        out = [_ZERO] * (order + 1)
        for j, c in enumerate(self.coeffs):
            if j * k > order:
                break
            out[j * k] = c
        return TruncSeries(out, order)

    # -- serialization ---------------------------------------------------------

    def _coeff_str(self, c) -> str:
        if isinstance(c, SCALAR_TYPES):
            return format_rational(c)
        return str(c)

    def __str__(self):
        chunks: list[str] = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            body = self._coeff_str(c)
            if n == 0:
                chunks.append(body)
                continue
            t_part = "t" if n == 1 else f"t^{n}"
            if body == "1":
                term = t_part
            elif body == "-1":
                term = f"-{t_part}"
            else:
                if " + " in body or " - " in body:
                    body = f"({body})"
                term = f"{body}*{t_part}"
            chunks.append(term)
        if not chunks:
            chunks = ["0"]
        joined = chunks[0]
        for term in chunks[1:]:
            if term.startswith("-"):
                joined += f" - {term[1:]}"
            else:
                joined += f" + {term}"
        return f"{joined} + O(t^{self.order + 1})"

    def __repr__(self):
        return f"TruncSeries({self})"
