"""
q-Bernoulli polynomials of higher order and their classical limits.

The polynomial parameter xi enters only through ``z = q^{-2 xi}``; for the
values used here (integers and half-integers) this is a Laurent monomial.

    beta_m^{(h,k)}(xi) = (1-q^{-2})^{-m} sum_i binom(m,i) (-z)^i (i+h)_k / ([i+h]_q)_k

The functional ``Phi(z^a) = (a+1)/[a+1]_q`` gives a second route to the same
numbers by integrating a product over k auxiliary variables.

>>> from fractions import Fraction
>>> classical_bernoulli(2, 1, Fraction(0))
Fraction(1, 6)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Tuple

from .coeff import QRat, falling, qfalling, qint
from .series import Series

__all__ = [
    "QBernParams",
    "NegativePower",
    "zxi",
    "qbernoulli",
    "qbernoulli_number",
    "phi",
    "qbernoulli_via_phi",
    "classical_bernoulli",
    "multinomial",
    "compositions",
]


class NegativePower(ValueError):
    """Phi is only defined on nonnegative powers of z."""


def zxi(xi) -> QRat:
    """z = q^{-2 xi} for integer or half-integer xi."""
    two = 2 * Fraction(xi)
    if two.denominator != 1:
        raise ValueError(f"xi = {xi} must be an integer or half-integer")
    return QRat.q(-int(two))


@dataclass(frozen=True)
class QBernParams:
    m: int
    h: int
    k: int
    xi: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "xi", Fraction(self.xi))
        if self.m < 0 or self.k < 0:
            raise ValueError("m and k must be nonnegative")
        if self.h < self.k:
            raise ValueError("h >= k is required")
        if self.k >= 1 and self.h < 1:
            raise ValueError("h must be positive")
        zxi(self.xi)

    @property
    def z_xi(self) -> QRat:
        return zxi(self.xi)


@lru_cache(maxsize=None)
def _qbern(m, h, k, xi):
    z = zxi(xi)
    total = QRat()
    for i in range(m + 1):
        term = QRat(comb(m, i) * falling(i + h, k)) / qfalling(i + h, k)
        total = total + term * (-z) ** i
    return total / (1 - QRat.q(-2)) ** m


def qbernoulli(p: QBernParams | int, h: int | None = None, k: int | None = None, xi=0) -> QRat:
    """beta_m^{(h,k)}(xi) by the explicit alternating sum."""
    if not isinstance(p, QBernParams):
        p = QBernParams(p, h, k, xi)
    return _qbern(p.m, p.h, p.k, p.xi)


def qbernoulli_number(m, h, k) -> QRat:
    return qbernoulli(m, h, k, 0)


def phi(f: Dict[int, object]) -> QRat:
    """Apply Phi to sum_a c_a z^a, given as {a: c_a}."""
    total = QRat()
    for a, c in f.items():
        if a < 0:
            raise NegativePower(f"z^{a}")
        if c:
            total = total + QRat(a + 1) / qint(a + 1) * c
    return total


def _mpoly_mul(a, b):
    out: Dict[Tuple[int, ...], QRat] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = ca * cb
            out[e] = out[e] + v if e in out else v
    return {e: v for e, v in out.items() if v}


def qbernoulli_via_phi(p: QBernParams | int, h: int | None = None, k: int | None = None, xi=0) -> QRat:
    """beta_m^{(h,k)}(xi) as Phi_{y_1}...Phi_{y_k} of z_1^{h-1}...z_k^{h-k} [xi + y_1 + ... + y_k]^m."""
    if not isinstance(p, QBernParams):
        p = QBernParams(p, h, k, xi)
    m, h, k = p.m, p.h, p.k
    z = p.z_xi
    one = QRat(1)
    c = 1 / (1 - QRat.q(-2))
    # [xi + sum y]_q = (1 - z * z_1 ... z_k) / (1 - q^{-2})
    base = {(): c * (1 - z)} if k == 0 else {(0,) * k: c, (1,) * k: -z * c}
    poly = {tuple(h - i for i in range(1, k + 1)): one}
    for _ in range(m):
        poly = _mpoly_mul(poly, base)
    # integrate y_1, then y_2, ...
    for _ in range(k):
        nxt: Dict[Tuple[int, ...], QRat] = {}
        for e, v in poly.items():
            val = phi({e[0]: v})
            nxt[e[1:]] = nxt[e[1:]] + val if e[1:] in nxt else val
        poly = nxt
    return sum(poly.values(), QRat())


@lru_cache(maxsize=None)
def _classical_series(k, xi, order):
    t = Fraction(1)
    # (e^t - 1)/t = sum t^j/(j+1)!
    g = Series([Fraction(1, factorial(j + 1)) for j in range(order + 1)], order)
    return Series.exp_t(order, Fraction(xi)) * (g ** (-k) if k else Series([t], order))


def classical_bernoulli(m: int, k: int, xi=Fraction(0)) -> Fraction:
    """B_m^{(k)}(xi) from e^{xi t}((e^t - 1)/t)^{-k}."""
    return _classical_series(k, Fraction(xi), m)[m] * factorial(m)


def multinomial(parts) -> int:
    n = sum(parts)
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def compositions(m: int, k: int):
    """All (i_1, ..., i_k) of nonnegative integers summing to m."""
    if k == 0:
        if m == 0:
            yield ()
        return
    if k == 1:
        yield (m,)
        return
    for i in range(m + 1):
        for rest in compositions(m - i, k - 1):
            yield (i,) + rest
