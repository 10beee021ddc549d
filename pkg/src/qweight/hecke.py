"""
The Hecke algebra H_m of type A.

Elements are finite linear combinations of basis monomials ``T_sigma`` indexed
by permutations in one-line notation (tuples of ``1..m``). Permutations
compose as functions, ``(s t)(x) = s(t(x))``, and the Artin generator ``g_i``
corresponds to the adjacent transposition ``s_i``. The quadratic relation is
``g_i^2 = 1 + (q - q^{-1}) g_i``.

Every basis monomial factors uniquely as ``C_{i_1 1} C_{i_2 2} ... C_{i_m m}``
with ``C_{ij} = g_{j-1} g_{j-2} ... g_i`` (empty when ``i = j``); the tuple
``(i_1, ..., i_m)`` is its normal code.

>>> g1 = HeckeElt.gen(1, 2)
>>> print(g1 * g1)
1 + (q - q^-1)*g1
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, Tuple

from .coeff import LAMBDA, QRat, qdim, qint

__all__ = [
    "Perm",
    "IndexOutOfRange",
    "SizeMismatch",
    "HeckeElt",
    "identity",
    "compose",
    "inverse_perm",
    "transposition",
    "code_of",
    "perm_of_code",
    "reduced_word",
    "word_perm",
    "length",
    "all_perms",
    "parse_word",
    "parse_perm",
    "qsymmetrizer",
    "classical_symmetrizer",
    "monomial_inverse",
    "concat",
    "qtrace",
    "gen_mul",
]

Perm = Tuple[int, ...]


class IndexOutOfRange(IndexError):
    pass


class SizeMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutations

def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def compose(s: Perm, t: Perm) -> Perm:
    """s o t."""
    return tuple(s[x - 1] for x in t)


def inverse_perm(s: Perm) -> Perm:
    inv = [0] * len(s)
    for i, x in enumerate(s, 1):
        inv[x - 1] = i
    return tuple(inv)


def transposition(i: int, m: int) -> Perm:
    p = list(range(1, m + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def length(s: Perm) -> int:
    n = len(s)
    return sum(1 for a in range(n) for b in range(a + 1, n) if s[a] > s[b])


def all_perms(m: int):
    """All permutations of 1..m in lexicographic one-line order."""
    return [tuple(p) for p in permutations(range(1, m + 1))]


def _left_swap(s: Perm, i: int) -> Perm:
    # s_i o s: exchange the values i and i+1
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in s)


def _right_swap(s: Perm, i: int) -> Perm:
    # s o s_i: exchange positions i and i+1
    p = list(s)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _cycle_word(i: int, j: int):
    """Generator indices of C_{ij} = g_{j-1} ... g_i."""
    return list(range(j - 1, i - 1, -1))


@lru_cache(maxsize=None)
def code_of(s: Perm) -> Tuple[int, ...]:
    """Normal code (i_1, ..., i_m) of a permutation.

    >>> code_of((3, 1, 2))
    (1, 2, 1)
    """
    m = len(s)
    if m == 0:
        return ()
    im = inverse_perm(s)[m - 1]
    # C_{im, m} sends im -> m; the prefix x = s o C^{-1} fixes m
    c = word_perm(_cycle_word(im, m), m)
    x = compose(s, inverse_perm(c))
    assert x[m - 1] == m
    return code_of(x[: m - 1]) + (im,)


def perm_of_code(code: Iterable[int]) -> Perm:
    code = tuple(code)
    m = len(code)
    for l, i in enumerate(code, 1):
        if not 1 <= i <= l:
            raise ValueError(f"invalid normal code {code}")
    word = []
    for l, i in enumerate(code, 1):
        word += _cycle_word(i, l)
    return word_perm(word, m)


@lru_cache(maxsize=None)
def reduced_word(s: Perm) -> Tuple[int, ...]:
    """Reduced word of ``s`` following its normal-code factorization."""
    word = []
    for l, i in enumerate(code_of(s), 1):
        word += _cycle_word(i, l)
    return tuple(word)


def word_perm(word: Iterable[int], m: int) -> Perm:
    """Permutation s_{a1} o ... o s_{ak} of a generator word."""
    p = identity(m)
    for i in word:
        p = _right_swap(p, i)
    return p


# ---------------------------------------------------------------------------

def _one_like(c):
    return c * 0 + 1


def _is_zero(c):
    return not c


@lru_cache(maxsize=1 << 18)
def _basis_product(s: Perm, t: Perm):
    """T_s T_t as a tuple of (perm, QRat) pairs."""
    cur = {s: QRat(1)}
    for i in reduced_word(t):
        cur = _right_gen_terms(cur, i)
    return tuple(cur.items())


def _right_gen_terms(terms, i):
    out: Dict[Perm, object] = {}
    for s, c in terms.items():
        t = _right_swap(s, i)
        _acc(out, t, c)
        if s[i - 1] > s[i]:
            _acc(out, s, c * LAMBDA)
    return {k: v for k, v in out.items() if not _is_zero(v)}


def _left_gen_terms(terms, i):
    out: Dict[Perm, object] = {}
    for s, c in terms.items():
        t = _left_swap(s, i)
        _acc(out, t, c)
        if s.index(i) > s.index(i + 1):
            _acc(out, s, c * LAMBDA)
    return {k: v for k, v in out.items() if not _is_zero(v)}


def _acc(d, k, v):
    if k in d:
        d[k] = d[k] + v
    else:
        d[k] = v


class HeckeElt:
    """Element of H_m with QRat or UCoeff coefficients."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        items = {} if terms is None else terms
        self.terms = {tuple(k): v for k, v in items.items() if not _is_zero(v)}
        for k in self.terms:
            if len(k) != m:
                raise SizeMismatch(f"permutation {k} is not in S_{m}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def one(cls, m: int, coeff=None):
        return cls(m, {identity(m): QRat(1) if coeff is None else coeff})

    @classmethod
    def basis(cls, s: Perm, coeff=None):
        s = tuple(s)
        return cls(len(s), {s: QRat(1) if coeff is None else coeff})

    @classmethod
    def from_code(cls, code):
        return cls.basis(perm_of_code(code))

    @classmethod
    def gen(cls, i: int, m: int):
        if not 1 <= i <= m - 1:
            raise IndexOutOfRange(f"g_{i} is not a generator of H_{m}")
        return cls.basis(transposition(i, m))

    @classmethod
    def gen_inv(cls, i: int, m: int):
        return cls.gen(i, m) - cls.one(m) * LAMBDA

    @classmethod
    def word(cls, word, m: int):
        """Product of generators; each token is ``i`` or ``-i`` for an inverse."""
        x = cls.one(m)
        for a in word:
            if a > 0:
                x = gen_mul("right", a, x)
            else:
                x = x * cls.gen_inv(-a, m)
        return x

    # -- vector space -----------------------------------------------------

    def _check(self, other):
        if self.m != other.m:
            raise SizeMismatch(f"H_{self.m} vs H_{other.m}")

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return HeckeElt(self.m, out)

    def __neg__(self):
        return HeckeElt(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HeckeElt(self.m, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return HeckeElt(self.m, {k: other * v for k, v in self.terms.items()})

    def __truediv__(self, c):
        return HeckeElt(self.m, {k: v / c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def map_coeffs(self, fn):
        return HeckeElt(self.m, {k: fn(v) for k, v in self.terms.items()})

    def embed(self, n: int):
        """Image under H_m -> H_n (n >= m), g_i -> g_i."""
        tail = tuple(range(self.m + 1, n + 1))
        return HeckeElt(n, {k + tail: v for k, v in self.terms.items()})

    def restrict(self):
        """Inverse of ``embed`` by one step; every term must fix m."""
        out = {}
        for k, v in self.terms.items():
            if k[-1] != self.m:
                raise ValueError("element does not lie in H_{m-1}")
            out[k[:-1]] = v
        return HeckeElt(self.m - 1, out)

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms, key=lambda p: (length(p), code_of(p))):
            c = self.terms[s]
            w = reduced_word(s)
            mono = "*".join(f"g{i}" for i in w)
            cs = str(c)
            if not mono:
                parts.append(cs if cs.startswith("(") or " " not in cs else f"({cs})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------

def gen_mul(side: str, i: int, x: HeckeElt) -> HeckeElt:
    """Multiply x by g_i on the given side ('left' or 'right')."""
    if not 1 <= i <= x.m - 1:
        raise IndexOutOfRange(f"g_{i} is not a generator of H_{x.m}")
    if side == "left":
        return HeckeElt(x.m, _left_gen_terms(x.terms, i))
    if side == "right":
        return HeckeElt(x.m, _right_gen_terms(x.terms, i))
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    if a.m != b.m:
        raise SizeMismatch(f"H_{a.m} vs H_{b.m}")
    out: Dict[Perm, object] = {}
    if len(a.terms) <= 4:
        for s, c in a.terms.items():
            for t, e in b.terms.items():
                ce = c * e
                for p, k in _basis_product(s, t):
                    _acc(out, p, ce * k)
        return HeckeElt(a.m, out)
    # dense left factor: push all of a through each reduced word of b
    for t, e in b.terms.items():
        cur = dict(a.terms)
        for i in reduced_word(t):
            cur = _right_gen_terms(cur, i)
        for p, k in cur.items():
            _acc(out, p, k * e)
    return HeckeElt(a.m, out)


def concat(x: HeckeElt, y: HeckeElt) -> HeckeElt:
    """Concatenation H_m x H_n -> H_{m+n}: g_i -> g_i, g_j -> g_{j+m}."""
    m, n = x.m, y.m
    out: Dict[Perm, object] = {}
    for s, c in x.terms.items():
        for t, e in y.terms.items():
            _acc(out, s + tuple(v + m for v in t), c * e)
    return HeckeElt(m + n, out)


def monomial_inverse(u) -> HeckeElt:
    """Inverse of a basis monomial, given as a permutation, a code or a HeckeElt basis element."""
    if isinstance(u, HeckeElt):
        if len(u.terms) != 1:
            raise ValueError("monomial_inverse expects a single basis monomial")
        (s, c), = u.terms.items()
        return monomial_inverse(s) / c
    s = tuple(u)
    if s and sorted(s) != list(range(1, len(s) + 1)):
        s = perm_of_code(s)
    m = len(s)
    return HeckeElt.word([-i for i in reversed(reduced_word(s))], m)


def qtrace(x: HeckeElt, N=None) -> HeckeElt:
    """Quantum trace H_m -> H_{m-1}; N=None selects universal (UCoeff) coefficients."""
    m = x.m
    if m < 1:
        raise ValueError("qtrace needs m >= 1")
    out = HeckeElt(m - 1)
    for s, c in x.terms.items():
        out = out + _qtrace_basis(s, N).scale(c)
    return out


@lru_cache(maxsize=1 << 16)
def _qtrace_basis(s: Perm, N):
    m = len(s)
    im = inverse_perm(s)[m - 1]
    c = word_perm(_cycle_word(im, m), m)
    x = compose(s, inverse_perm(c))[: m - 1]
    if im == m:
        return HeckeElt.basis(x, qdim(N))
    cur = {x: QRat(1)}
    for i in _cycle_word(im, m - 1):
        cur = _right_gen_terms(cur, i)
    return HeckeElt(m - 1, cur)


@lru_cache(maxsize=None)
def qsymmetrizer(m: int) -> HeckeElt:
    """The q-symmetrizer h_m, a central idempotent of H_m."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return HeckeElt.one(1)
    prev = qsymmetrizer(m - 1).embed(m)
    mid = HeckeElt.one(m, QRat.q(2 - 2 * m)) + HeckeElt.gen(m - 1, m).scale(QRat.q(-1) * qint(m - 1))
    return (prev * mid * prev) / qint(m)


def classical_symmetrizer(m: int) -> Dict[Perm, Fraction]:
    """Uniform average over S_m as a formal permutation sum."""
    w = Fraction(1, factorial(m))
    return {s: w for s in all_perms(m)}


# ---------------------------------------------------------------------------
# text syntax

_TOKEN = re.compile(r"^g(\d+)(\^-1)?$")


def parse_word(text: str):
    """Parse ``"g1 g3 g2^-1"`` (whitespace or ``*`` separated) into signed indices."""
    tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
    word = []
    for t in tokens:
        mt = _TOKEN.match(t)
        if not mt:
            raise ValueError(f"bad Hecke word token {t!r}")
        i = int(mt.group(1))
        if i < 1:
            raise ValueError(f"bad generator index in {t!r}")
        word.append(-i if mt.group(2) else i)
    return word


def parse_perm(text: str) -> Perm:
    """Parse one-line notation ``[2,1,4,3]``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"permutation must look like [2,1,3], got {text!r}")
    vals = tuple(int(v) for v in body[1:-1].split(",") if v.strip())
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise ValueError(f"{text!r} is not a permutation")
    return vals
