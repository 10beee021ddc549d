"""
Truncated formal power series over an arbitrary exact coefficient ring.

Coefficients may be any objects closed under ``+``, ``-``, ``*`` and exact
division by integers (``Fraction``, :class:`~qweight.coeff.QRat`,
:class:`~qweight.coeff.UCoeff`, symbolic polynomials, ...). Results are valid
modulo ``t^(order + 1)``.

>>> from fractions import Fraction
>>> e = Series.exp_t(4, Fraction(1))
>>> e.coeffs
(Fraction(1, 1), Fraction(1, 1), Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

__all__ = ["Series", "NonInvertibleConstantTerm"]


class NonInvertibleConstantTerm(ArithmeticError):
    """Division by, or a negative/log power of, a series whose constant term cannot be inverted."""


def _zero_like(c):
    return c * 0


def _invert_scalar(c):
    if not c:
        raise NonInvertibleConstantTerm("constant term is zero")
    try:
        inv = 1 / c
    except (TypeError, ZeroDivisionError) as exc:
        raise NonInvertibleConstantTerm(f"cannot invert constant term {c}") from exc
    if inv is NotImplemented:
        raise NonInvertibleConstantTerm(f"cannot invert constant term {c}")
    return inv


class Series:
    """Power series ``sum c_k t^k`` truncated after ``t^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Any], order: int, zero: Any = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = list(coeffs[: order + 1])
        if zero is None:
            zero = _zero_like(coeffs[0]) if coeffs else Fraction(0)
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    @classmethod
    def monomial(cls, c, k, order):
        z = _zero_like(c)
        return cls([z] * k + [c], order, zero=z)

    @classmethod
    def exp_t(cls, order, scale=Fraction(1)):
        """exp(scale * t)."""
        if isinstance(scale, int):
            scale = Fraction(scale)
        out = []
        term = scale * 0 + 1
        for k in range(order + 1):
            out.append(term)
            term = term * scale / (k + 1)
        return cls(out, order)

    # -- helpers ----------------------------------------------------------

    @property
    def zero(self):
        return _zero_like(self.coeffs[0])

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        return Series([other], self.order, zero=_zero_like(other) if other is not None else None)

    def _common_order(self, other):
        return min(self.order, other.order)

    def truncate(self, order):
        return Series(self.coeffs, order, zero=self.zero)

    def map(self, fn):
        return Series([fn(c) for c in self.coeffs], self.order)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        n = self._common_order(o)
        return Series([self.coeffs[k] + o.coeffs[k] for k in range(n + 1)], n)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.order)
        n = self._common_order(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, n)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.order)

    def inverse(self):
        """Multiplicative inverse; the constant term must be invertible."""
        inv0 = _invert_scalar(self.coeffs[0])
        a = self.coeffs
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * out[k - i]
            out.append(-(acc * inv0))
        return Series(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return Series([c / other for c in self.coeffs], self.order)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = Series([self.coeffs[0] * 0 + 1], self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self):
        return Series([self.coeffs[k] * k for k in range(1, self.order + 1)], max(self.order - 1, 0)) \
            if self.order else Series([self.zero], 0)

    def exp(self):
        """exp(f) for f with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp requires a zero constant term")
        # f' = f' ; g = exp(f) solves g' = f' g
        a = self.coeffs
        one = a[0] * 0 + 1
        g = [one]
        for k in range(1, self.order + 1):
            acc = a[1] * g[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * i * g[k - i]
            g.append(acc / k)
        return Series(g, self.order)

    def log(self):
        """log(f) for f with constant term 1."""
        if self.coeffs[0] != 1:
            raise NonInvertibleConstantTerm("log requires constant term 1")
        d = self.derivative() if self.order else Series([self.zero], 0)
        if not self.order:
            return Series([self.zero], 0)
        q = d * self.truncate(self.order - 1).inverse()
        return Series([self.zero] + [q.coeffs[k - 1] / k for k in range(1, self.order + 1)], self.order)

    def power(self, e):
        """f^e for rational e, f with constant term 1 (via exp(e log f))."""
        if isinstance(e, int):
            return self ** e
        return (self.log() * Fraction(e)).exp()

    def compose_linear(self, c):
        """f(c t)."""
        out = []
        p = self.coeffs[0] * 0 + 1
        for k in range(self.order + 1):
            out.append(self.coeffs[k] * p)
            p = p * c
        return Series(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = self._common_order(other)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, order={self.order})"
