"""
Exact coefficient rings.

* ``Fraction`` plays the role of the rationals.
* :class:`QRat` is a rational function in ``q`` over the rationals, kept in a
  canonical reduced form so that equality is structural.
* :class:`UCoeff` is a Laurent polynomial in the formal symbol ``w = q^{-N}``
  with :class:`QRat` coefficients; it carries the universal (all-``N``) mode.
* :class:`UPoly` is a plain univariate polynomial over the rationals, used when
  a classical formula needs ``N`` as a formal variable.

q-numbers follow the convention ``[n]_q = (1 - q^{-2n}) / (1 - q^{-2})``, so
that ``q^{-1}[N]_q`` is the trace of ``diag(q^{1-2N}, ..., q^{-1})``.

>>> qint(3)
1 + q^-2 + q^-4
>>> eval_q1(qint(3))
Fraction(3, 1)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "PoleAtOne",
    "QRat",
    "UCoeff",
    "UPoly",
    "Q",
    "LAMBDA",
    "qint",
    "qfalling",
    "qfactorial",
    "qdim",
    "eval_q1",
    "substitute_w",
    "falling",
    "as_fraction",
]


class PoleAtOne(ArithmeticError):
    """The reduced denominator vanishes at ``q = 1``."""


# ---------------------------------------------------------------------------
# integer polynomials: tuples of ints, lowest degree first, no trailing zeros

def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _val(a):
    """q-adic valuation (index of the lowest nonzero coefficient)."""
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("valuation of zero")


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return _trim(c)


def _neg(a):
    return tuple(-x for x in a)


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * x for x in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * x for x in a)
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return tuple(c)


def _shift(a, k):
    """Multiply by q^k (k >= 0) or divide exactly by q^-k."""
    if not a or k == 0:
        return a
    if k > 0:
        return (0,) * k + a
    return a[-k:]


def _scale(a, s):
    return tuple(s * x for x in a) if s else ()


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a):
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a) if g not in (1,) else a


def _divexact(a, b):
    """Exact quotient a / b of integer polynomials (b divides a over Z)."""
    if len(b) == 1:
        d = b[0]
        return tuple(x // d for x in a)
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            t = c // lb
            out[k - db] = t
            for j in range(db + 1):
                a[k - db + j] -= t * b[j]
    return _trim(out)


def _prem(a, b):
    """Pseudo-remainder of a by b."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        while a and not a[-1]:
            a.pop()
    return tuple(a)


@lru_cache(maxsize=1 << 16)
def _pgcd(a, b):
    """Primitive gcd of two nonzero integer polynomials, positive leading coefficient."""
    va, vb = _val(a), _val(b)
    v = min(va, vb)
    a, b = a[va:], b[vb:]
    if len(a) == 1 or len(b) == 1:
        return (0,) * v + (1,)
    a, b = _primitive(a), _primitive(b)
    if a == b:
        return (0,) * v + a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else ())
        if len(b) == 1:
            return (0,) * v + (1,)
    return (0,) * v + _primitive(a)


def _peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _from_fraction_coeffs(coeffs):
    """Integer polynomial and common denominator for a list of Fractions."""
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    return _trim([int(Fraction(c) * den) for c in coeffs]), den


# ---------------------------------------------------------------------------

class QRat:
    """Rational function in q with rational coefficients.

    Stored as a pair of coprime integer polynomials in q with a positive
    leading denominator coefficient and jointly primitive integer content.
    The rational-monic form (denominator with leading coefficient 1) is
    available through :attr:`numerator` and :attr:`denominator`.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, QRat):
            self._num, self._den = value._num, value._den
        else:
            value = Fraction(value)
            if value:
                self._num, self._den = (value.numerator,), (value.denominator,)
            else:
                self._num, self._den = (), (1,)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, num, den):
        if not den:
            raise ZeroDivisionError("QRat division by zero")
        if not num:
            return cls._raw((), (1,))
        g = _pgcd(num, den)
        if len(g) > 1:
            num, den = _divexact(num, g), _divexact(den, g)
        c = gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        return cls._raw(num, den)

    @classmethod
    def from_coeffs(cls, num, den=(1,)):
        """Build from rational coefficient lists (lowest degree first)."""
        n, dn = _from_fraction_coeffs(num)
        d, dd = _from_fraction_coeffs(den)
        return cls._make(_scale(n, dd), _scale(d, dn))

    @classmethod
    def q(cls, k=1):
        """The Laurent monomial q^k."""
        if k >= 0:
            return cls._raw((0,) * k + (1,), (1,))
        return cls._raw((1,), (0,) * (-k) + (1,))

    @classmethod
    def laurent(cls, terms):
        """Build sum c_k q^k from a mapping {k: c_k}."""
        terms = {k: Fraction(c) for k, c in terms.items() if c}
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        coeffs = [terms.get(k, 0) for k in range(lo, hi + 1)]
        if lo >= 0:
            return cls.from_coeffs([0] * lo + coeffs)
        return cls.from_coeffs(coeffs, [0] * (-lo) + [1])

    # -- accessors --------------------------------------------------------

    @property
    def numerator(self):
        """Numerator coefficients as Fractions, for a monic denominator."""
        lc = self._den[-1]
        return tuple(Fraction(x, lc) for x in self._num)

    @property
    def denominator(self):
        """Monic denominator coefficients as Fractions."""
        lc = self._den[-1]
        return tuple(Fraction(x, lc) for x in self._den)

    def is_laurent(self):
        """True when the reduced denominator is a power of q."""
        return len(self._den) == 1 or not any(self._den[:-1])

    def laurent_terms(self):
        """{k: c_k} for a Laurent polynomial; raises ValueError otherwise."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        shift = len(self._den) - 1
        lc = self._den[-1]
        return {i - shift: Fraction(c, lc) for i, c in enumerate(self._num) if c}

    def is_constant(self):
        return len(self._num) <= 1 and len(self._den) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self._num[0], self._den[0]) if self._num else Fraction(0)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (int, Rational)):
            return QRat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._num:
            return self
        if not self._num:
            return o
        a, b, c, d = self._num, self._den, o._num, o._den
        if b == d:
            return QRat._make(_add(a, c), b)
        vb, vd = _val(b), _val(d)
        bc, dc = b[vb:], d[vd:]
        v = max(vb, vd)
        if bc == dc:
            # same q-free part: only the q-power differs
            num = _add(_shift(a, v - vb), _shift(c, v - vd))
            return QRat._make(num, _shift(bc, v))
        g = _pgcd(bc, dc)
        if len(g) == 1:
            num = _add(_mul(_shift(a, v - vb), dc), _mul(_shift(c, v - vd), bc))
            den = _shift(_mul(bc, dc), v)
        else:
            b1, d1 = _divexact(bc, g), _divexact(dc, g)
            num = _add(_mul(_shift(a, v - vb), d1), _mul(_shift(c, v - vd), b1))
            den = _shift(_mul(_mul(b1, d1), g), v)
        # integer contents of bc and dc may have been scaled; _make fixes content
        return QRat._make(num, den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(_neg(self._num), self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._num or not o._num:
            return QRat()
        a, b, c, d = self._num, self._den, o._num, o._den
        if len(b) == 1 and len(d) == 1:
            return QRat._make(_mul(a, c), (b[0] * d[0],))
        g1 = _pgcd(a, d)
        g2 = _pgcd(c, b)
        if len(g1) > 1:
            a, d = _divexact(a, g1), _divexact(d, g1)
        if len(g2) > 1:
            c, b = _divexact(c, g2), _divexact(b, g2)
        num, den = _mul(a, c), _mul(b, d)
        k = gcd(_content(num), _content(den))
        if den[-1] < 0:
            k = -k
        if k != 1:
            num = tuple(x // k for x in num)
            den = tuple(x // k for x in den)
        return QRat._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self._num:
            raise ZeroDivisionError("QRat division by zero")
        num, den = self._den, self._num
        if den[-1] < 0:
            num, den = _neg(num), _neg(den)
        return QRat._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QRat(1)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, x):
        """Exact value at a rational point q = x."""
        x = Fraction(x)
        d = _peval(self._den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at q = {x}")
        return Fraction(_peval(self._num, x)) / d

    def eval_q1(self):
        d = sum(self._den)
        if d == 0:
            raise PoleAtOne(f"{self} has a pole at q = 1")
        return Fraction(sum(self._num), d)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.is_laurent():
            return format_laurent(self.laurent_terms())
        num = format_poly(self.numerator)
        den = format_poly(self.denominator)
        if sum(1 for c in self.numerator if c) > 1:
            num = f"({num})"
        return f"{num}/({den})" if sum(1 for c in self.denominator if c) > 1 else f"{num}/{den}"


def _format_coeff_term(c, mono):
    """Render c * mono with sign separated out; mono may be ''."""
    sign = "-" if c < 0 else "+"
    c = abs(c)
    if not mono:
        return sign, str(c)
    if c == 1:
        return sign, mono
    return sign, f"{c}*{mono}"


def _join_terms(parts):
    if not parts:
        return "0"
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _qmono(k, var="q"):
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def format_laurent(terms, var="q"):
    """Render {k: c} as a Laurent polynomial, constant first, then descending powers."""
    keys = sorted(terms, key=lambda k: (k != 0, -k))
    return _join_terms([_format_coeff_term(terms[k], _qmono(k, var)) for k in keys])


def format_poly(coeffs, var="q"):
    """Render a coefficient tuple (lowest first) with the highest power first."""
    parts = [
        _format_coeff_term(c, _qmono(k, var))
        for k, c in reversed(list(enumerate(coeffs)))
        if c
    ]
    return _join_terms(parts)


# ---------------------------------------------------------------------------

def as_fraction(x):
    """Normalize an int/Fraction/constant QRat to a Fraction."""
    if isinstance(x, QRat):
        return x.constant_value()
    return Fraction(x)


Q = QRat.q()
LAMBDA = Q - QRat.q(-1)  # q - q^{-1}


def _half_integer(n):
    n = Fraction(n)
    if (2 * n).denominator != 1:
        raise ValueError(f"{n} is not an integer or half-integer")
    return int(2 * n)


@lru_cache(maxsize=None)
def _qint_doubled(n2):
    # [n]_q with n = n2 / 2
    return (1 - QRat.q(-n2)) / (1 - QRat.q(-2))


def qint(n):
    """The q-number [n]_q = (1 - q^{-2n}) / (1 - q^{-2}); n integer or half-integer."""
    return _qint_doubled(_half_integer(n))


def qfalling(a, b):
    """([a]_q)_b = [a]_q [a-1]_q ... [a-b+1]_q."""
    if b < 0:
        raise ValueError("falling length must be nonnegative")
    a = Fraction(a)
    result = QRat(1)
    for j in range(b):
        result = result * qint(a - j)
    return result


def qfactorial(n):
    return qfalling(n, n)


def falling(a, b):
    """(a)_b = a (a-1) ... (a-b+1) for rational a."""
    result = Fraction(1) if isinstance(a, Fraction) else 1
    for j in range(b):
        result *= a - j
    return result


def eval_q1(x):
    """The value at q = 1 of a QRat (or pass through a rational)."""
    if isinstance(x, QRat):
        return x.eval_q1()
    if isinstance(x, UCoeff):
        raise TypeError("substitute w = q^{-N} before taking q -> 1")
    return Fraction(x)


# ---------------------------------------------------------------------------

class UCoeff:
    """Laurent polynomial in w = q^{-N} with QRat coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {0: terms}
        self.terms = {k: QRat(v) for k, v in terms.items() if v}

    @classmethod
    def w(cls, k=1):
        return cls({k: QRat(1)})

    @staticmethod
    def _coerce(other):
        if isinstance(other, UCoeff):
            return other
        if isinstance(other, (QRat, int, Rational)):
            return UCoeff({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, v in o.terms.items():
            terms[k] = terms[k] + v if k in terms else v
        return UCoeff(terms)

    __radd__ = __add__

    def __neg__(self):
        return UCoeff({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (QRat, int, Rational)):
            if not other:
                return UCoeff()
            return UCoeff({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, UCoeff):
            return NotImplemented
        terms = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                terms[k] = terms[k] + a * b if k in terms else a * b
        return UCoeff(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (QRat, int, Rational)):
            inv = QRat(1) / QRat(other)
            return UCoeff({k: v * inv for k, v in self.terms.items()})
        if isinstance(other, UCoeff) and len(other.terms) == 1:
            (k, v), = other.terms.items()
            return UCoeff({i - k: c / v for i, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = UCoeff(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def substitute(self, N):
        return substitute_w(self, N)

    def w_powers(self):
        return sorted(self.terms)

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            mono = "" if k == 0 else ("q^-N" if k == 1 else f"q^-{k}N" if k > 0 else f"q^{-k}N")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


def substitute_w(x, N):
    """Replace each w^k by q^{-Nk}; plain QRat/rationals pass through."""
    if not isinstance(x, UCoeff):
        return QRat(x)
    total = QRat()
    for k, v in x.terms.items():
        total = total + v * QRat.q(-N * k)
    return total


def qdim(N=None):
    """The quantum-trace scalar q^{-1}[N]_q: a QRat at fixed N, a UCoeff when N is None."""
    if N is None:
        return (UCoeff(1) - UCoeff.w(2)) / LAMBDA
    return QRat.q(-1) * qint(N)


# ---------------------------------------------------------------------------

class UPoly:
    """Univariate polynomial over the rationals in a named variable (default ``N``)."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="N"):
        if isinstance(coeffs, (int, Rational)):
            coeffs = (coeffs,)
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def variable(cls, var="N"):
        return cls((0, 1), var)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Rational)):
            return UPoly((other,), self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return UPoly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-x for x in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UPoly((), self.var)
        c = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(o.coeffs):
                c[i + j] += x * y
        return UPoly(c, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return UPoly([x / other for x in self.coeffs], self.var)
        if isinstance(other, UPoly) and len(other.coeffs) == 1:
            return self / other.coeffs[0]
        return NotImplemented

    def __rtruediv__(self, other):
        if len(self.coeffs) != 1:
            return NotImplemented
        return UPoly((Fraction(other) / self.coeffs[0],), self.var)

    def __pow__(self, n):
        result = UPoly((1,), self.var)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return str(self)

    def __str__(self):
        return format_poly(self.coeffs, self.var)
