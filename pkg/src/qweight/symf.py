"""
Symmetric polynomials in N variables and Harish-Chandra images.

A :class:`SymPoly` stores its monomial expansion (exponent vectors to
coefficients) together with the name of its variable set, ``x`` or ``xi``.
The quantum variable change is ``x_i = (q^{1-N} - xi_i)/(q^2 - 1)``; equality
tests across variable sets always go through ``x``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Tuple

from .centerpoly import CenterPoly
from .coeff import LAMBDA, QRat, UPoly, qint
from .series import Series

__all__ = [
    "SymPoly",
    "one_part_schur",
    "elementary",
    "qpower_sum_hc",
    "qcasimir_hc",
    "classical_casimir_hc",
    "schur_substitution",
    "shifted_schur_expand",
    "hc_image",
]

Exp = Tuple[int, ...]


def _acc(d, k, v):
    if k in d:
        s = d[k] + v
        if s:
            d[k] = s
        else:
            del d[k]
    elif v:
        d[k] = v


class SymPoly:
    """Polynomial in N commuting variables (normally symmetric)."""

    __slots__ = ("N", "var", "terms")

    def __init__(self, N: int, terms: Dict[Exp, object] | None = None, var: str = "x"):
        self.N = N
        self.var = var
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, N, var="x"):
        return cls(N, {(0,) * N: c}, var)

    @classmethod
    def variable(cls, i, N, var="x"):
        e = [0] * N
        e[i] = 1
        return cls(N, {tuple(e): Fraction(1)}, var)

    # -- ring -------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, SymPoly):
            if other.N != self.N:
                raise ValueError("different numbers of variables")
            if other.var != self.var and other.terms and self.terms:
                if not (other.is_constant() or self.is_constant()):
                    raise ValueError(f"cannot mix variables {self.var} and {other.var}")
            return other
        return SymPoly.const(other, self.N, self.var)

    def is_constant(self):
        return all(not any(k) for k in self.terms)

    def __add__(self, other):
        o = self._lift(other)
        var = self.var if not self.is_constant() else o.var
        out = dict(self.terms)
        for k, v in o.terms.items():
            _acc(out, k, v)
        return SymPoly(self.N, out, var)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.N, {k: -v for k, v in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            if not other:
                return SymPoly(self.N, {}, self.var)
            return SymPoly(self.N, {k: v * other for k, v in self.terms.items()}, self.var)
        o = self._lift(other)
        var = self.var if not self.is_constant() else o.var
        out: Dict[Exp, object] = {}
        for a, x in self.terms.items():
            for b, y in o.terms.items():
                _acc(out, tuple(i + j for i, j in zip(a, b)), x * y)
        return SymPoly(self.N, out, var)

    def __rmul__(self, other):
        if isinstance(other, SymPoly):
            return other.__mul__(self)
        if not other:
            return SymPoly(self.N, {}, self.var)
        return SymPoly(self.N, {k: other * v for k, v in self.terms.items()}, self.var)

    def __truediv__(self, c):
        return SymPoly(self.N, {k: v / c for k, v in self.terms.items()}, self.var)

    def __pow__(self, n):
        result = SymPoly.const(Fraction(1), self.N, self.var)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            if self.N != other.N:
                return False
            if self.var != other.var and not (self.is_constant() and other.is_constant()):
                return False
            return not (self - SymPoly(self.N, other.terms, self.var)).terms
        return not (self - other).terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- structure --------------------------------------------------------

    def degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def homogeneous(self, d):
        return SymPoly(self.N, {k: v for k, v in self.terms.items() if sum(k) == d}, self.var)

    def map_coeffs(self, fn):
        return SymPoly(self.N, {k: fn(v) for k, v in self.terms.items()}, self.var)

    def is_symmetric(self):
        for i in range(self.N - 1):
            sw = {}
            for k, v in self.terms.items():
                k = list(k)
                k[i], k[i + 1] = k[i + 1], k[i]
                sw[tuple(k)] = v
            if SymPoly(self.N, sw, self.var) != self:
                return False
        return True

    def substitute(self, images):
        """Replace variable i by ``images[i]`` (SymPoly) in every monomial."""
        N = self.N
        cache = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[(i, e)] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return cache[(i, e)]

        var = images[0].var if images else self.var
        total = SymPoly(N, {}, var)
        for k, c in self.terms.items():
            term = SymPoly.const(c, N, var)
            for i, e in enumerate(k):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def to_x(self):
        """Rewrite a xi-polynomial in x via xi_i = q^{1-N} - (q^2 - 1) x_i."""
        if self.var == "x":
            return self
        N = self.N
        shift = QRat.q(1 - N)
        scale = QRat.q(2) - 1
        imgs = [SymPoly.const(shift, N, "x") - SymPoly.variable(i, N, "x") * scale for i in range(N)]
        return self.substitute(imgs)

    def to_xi(self):
        """Rewrite an x-polynomial in xi via x_i = (q^{1-N} - xi_i)/(q^2 - 1)."""
        if self.var == "xi":
            return self
        N = self.N
        shift = QRat.q(1 - N)
        inv = 1 / (QRat.q(2) - 1)
        imgs = [(SymPoly.const(shift, N, "xi") - SymPoly.variable(i, N, "xi")) * inv for i in range(N)]
        return self.substitute(imgs)

    def to_h(self) -> CenterPoly:
        """Express in one-part Schur symbols S_k (unique in S_1..S_N).

        A combination of single S_k's is recognized directly; otherwise the
        polynomial is reduced in the elementary basis and rewritten through
        the Newton-type relation between e and h.
        """
        lin = self._as_linear_h()
        if lin is not None:
            return lin
        N = self.N
        rest = SymPoly(N, dict(self.terms), self.var)
        e_coeffs: Dict[Tuple[int, ...], object] = {}
        while rest.terms:
            lead = max(rest.terms)
            c = rest.terms[lead]
            if list(lead) != sorted(lead, reverse=True):
                raise ValueError("polynomial is not symmetric")
            # conjugate partition gives the e-monomial with this leading term
            mu = tuple(sum(1 for a in lead if a >= i) for i in range(1, lead[0] + 1)) if lead and lead[0] else ()
            e_coeffs[mu] = c
            prod = SymPoly.const(Fraction(1), N, self.var)
            for k in mu:
                prod = prod * elementary(k, N, self.var)
            rest = rest - prod * c
        out = CenterPoly("S")
        for mu, c in e_coeffs.items():
            term = CenterPoly.const(c, "S")
            for k in mu:
                term = term * _e_in_h(k)
            out = out + term
        return out

    def _as_linear_h(self):
        out = CenterPoly("S")
        for d in range(self.degree() + 1):
            comp = self.homogeneous(d)
            if not comp:
                continue
            c = comp.terms.get((d,) + (0,) * (self.N - 1))
            if c is None or comp != one_part_schur(d, self.N, self.var) * c:
                return None
            out = out + (CenterPoly.var(d, "S", c) if d else CenterPoly.const(c, "S"))
        return out

    def evaluate(self, point):
        total = 0
        for k, c in self.terms.items():
            t = c
            for x, e in zip(point, k):
                t = t * x ** e
            total = total + t
        return total

    def __repr__(self):
        from .render import render_sympoly

        return render_sympoly(self)

    __str__ = __repr__


@lru_cache(maxsize=None)
def _e_in_h(k: int) -> CenterPoly:
    if k == 0:
        return CenterPoly.const(Fraction(1), "S")
    total = CenterPoly("S")
    for i in range(k):
        h = CenterPoly.var(k - i, "S")
        total = total + _e_in_h(i) * h * ((-1) ** i)
    return total * ((-1) ** (k + 1))


@lru_cache(maxsize=None)
def one_part_schur(k: int, N: int, var: str = "x") -> SymPoly:
    """Complete homogeneous symmetric polynomial h_k in N variables."""
    terms = {}
    for combo in combinations_with_replacement(range(N), k):
        e = [0] * N
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = Fraction(1)
    if k == 0:
        terms = {(0,) * N: Fraction(1)}
    return SymPoly(N, terms, var)


@lru_cache(maxsize=None)
def elementary(k: int, N: int, var: str = "x") -> SymPoly:
    from itertools import combinations

    terms = {}
    for combo in combinations(range(N), k):
        e = [0] * N
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return SymPoly(N, terms, var)


def _ratio_factor(a: SymPoly, b: SymPoly, order: int) -> Series:
    """(1 - a v)/(1 - b v) as a v-series."""
    N = a.N
    one = SymPoly.const(Fraction(1), N, a.var)
    coeffs = [one]
    bp = one
    for n in range(1, order + 1):
        # coefficient b^n - a b^{n-1}
        coeffs.append(bp * b - bp * a)
        bp = bp * b
    return Series(coeffs, order)


def _product_series(pairs, order):
    s = None
    for a, b in pairs:
        f = _ratio_factor(a, b, order)
        s = f if s is None else s * f
    return s


@lru_cache(maxsize=None)
def _qpower_sum_series(N, order):
    xi = [SymPoly.variable(i, N, "xi") for i in range(N)]
    return _product_series([(x * QRat.q(-2), x) for x in xi], order)


@lru_cache(maxsize=None)
def qpower_sum_hc(m: int, N: int) -> SymPoly:
    """Harish-Chandra image of the quantum power sum p_m, in xi."""
    if m < 1:
        raise ValueError("m must be positive")
    return _qpower_sum_series(N, m)[m] / LAMBDA


@lru_cache(maxsize=None)
def _qcasimir_table(N, order):
    x = [SymPoly.variable(i, N, "x") for i in range(N)]
    a_shift = qint(Fraction(N + 1, 2))
    b_shift = qint(Fraction(N - 1, 2))
    q2 = QRat.q(2)
    P = _product_series([(xi + a_shift, xi * q2 + b_shift) for xi in x], order)
    C = {0: SymPoly(N, {}, "x")}
    for n in range(1, order + 1):
        rhs = P[n] + C[n - 1] * QRat.q(n)
        if n == 1:
            rhs = rhs + qint(N)
        C[n] = rhs / ((1 - QRat.q(-2)) * QRat.q(n + 1))
    return C


def qcasimir_hc(m: int, N: int) -> SymPoly:
    """Harish-Chandra image of the quantum Casimir C_m, in x."""
    if m < 1:
        raise ValueError("m must be positive")
    return _qcasimir_table(N, m)[m]


@lru_cache(maxsize=None)
def _ccasimir_series(N, order):
    x = [SymPoly.variable(i, N, "x") for i in range(N)]
    return _product_series(
        [(xi + Fraction(N + 1, 2), xi + Fraction(N - 1, 2)) for xi in x], order
    )


def classical_casimir_hc(m: int, N: int) -> SymPoly:
    """Harish-Chandra image of the classical Casimir C_m = Tr(E^m), in x."""
    if m < 1:
        raise ValueError("m must be positive")
    return -_ccasimir_series(N, m + 1)[m + 1]


def hc_image(poly: CenterPoly, N: int, quantum: bool = True) -> SymPoly:
    """Harish-Chandra image (in x) of a C-, p- or S-polynomial at fixed N."""
    from .coeff import UCoeff, substitute_w

    poly = poly.map_coeffs(lambda c: substitute_w(c, N) if isinstance(c, UCoeff) else c)
    one = SymPoly.const(Fraction(1), N, "x")
    order = max(poly.max_index(), 1)
    if poly.kind == "C":
        imgs = {k: (qcasimir_hc(k, N) if quantum else classical_casimir_hc(k, N)) for k in range(1, order + 1)}
    elif poly.kind == "p":
        if not quantum:
            raise ValueError("p-symbols only have a quantum image here")
        imgs = {k: qpower_sum_hc(k, N).to_x() for k in range(1, order + 1)}
    elif poly.kind == "S":
        imgs = {k: one_part_schur(k, N) for k in range(1, order + 1)}
    else:
        raise ValueError(f"no image for {poly.kind}-symbols")
    return poly.evaluate(imgs, one=one)


# ---------------------------------------------------------------------------
# Schur substitution

@lru_cache(maxsize=None)
def _c_from_s(order: int, N):
    """{m: C_m as a CenterPoly in S}, N an integer or None for formal N."""
    L = order + 1
    if N is None:
        n = UPoly.variable("N")
        unit = UPoly((1,))
    else:
        n = Fraction(N)
        unit = Fraction(1)
    one = CenterPoly.const(unit, "S")
    half = Fraction(1, 2)
    a = Series([one, one * (-(n + 1) * half)], L)  # 1 - (N+1)v/2
    b = Series([one, one * (-(n - 1) * half)], L)  # 1 - (N-1)v/2
    if N is None:
        pref = ((a / b).log() * n).exp()
    else:
        pref = (a / b) ** int(N)
    v = Series.monomial(one, 1, L)
    num = Series([one], L)
    den = Series([one], L)
    binv, ainv = b.inverse(), a.inverse()
    vb, va = Series([one], L), Series([one], L)
    for i in range(1, L + 1):
        vb = vb * v * binv
        va = va * v * ainv
        s_i = CenterPoly.var(i, "S", unit)
        num = num + vb * s_i
        den = den + va * s_i
    total = pref * num * den.inverse()
    return {m: -total[m + 1] for m in range(1, order + 1)}


@lru_cache(maxsize=None)
def _s_from_c(order: int, N):
    cs = _c_from_s(order, N)
    out = {}
    for k in range(1, order + 1):
        ck = cs[k]
        lead = ck.terms.get((k,))
        rest = CenterPoly("S", {mono: c for mono, c in ck.terms.items() if mono != (k,)})
        # rest only involves S_1..S_{k-1}: rewrite them in C
        rest_c = rest.evaluate(out, one=CenterPoly.const(Fraction(1), "C")) if rest.terms else CenterPoly("C")
        out[k] = (CenterPoly.var(k, "C") - rest_c) / lead
    return out


def schur_substitution(direction: str, order: int, N=None):
    """C_1..C_order in terms of S (``"C_from_S"``) or the inverse (``"S_from_C"``).

    ``N=None`` keeps N as a formal variable (coefficients are :class:`UPoly`).
    """
    if order < 1:
        raise ValueError("order must be positive")
    if direction == "C_from_S":
        return dict(_c_from_s(order, N))
    if direction == "S_from_C":
        return dict(_s_from_c(order, N))
    raise ValueError("direction must be 'C_from_S' or 'S_from_C'")


def shifted_schur_expand(m: int, u, N: int) -> SymPoly:
    """Difference S_m(xi) - sum_k (-1)^k binom(nu+m, m-k) S_k(u - xi) u^{m-k}; expected zero."""
    nu = N - 1
    lhs = one_part_schur(m, N, "xi")
    shifted = [SymPoly.const(u, N, "xi") - SymPoly.variable(i, N, "xi") for i in range(N)]
    rhs = SymPoly(N, {}, "xi")
    for k in range(m + 1):
        sk = one_part_schur(k, N, "xi").substitute(shifted) if k else SymPoly.const(Fraction(1), N, "xi")
        rhs = rhs + sk * (u ** (m - k) * comb(nu + m, m - k) * (-1) ** k)
    return lhs - rhs
