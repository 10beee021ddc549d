"""
Polynomials in formal central symbols ``C_1, C_2, ...`` (Casimirs), ``p_1, p_2, ...``
(power sums) or ``S_1, S_2, ...`` (one-part Schurs).

A monomial is a sorted tuple of positive indices, so ``C_1^2 C_3`` is
``(1, 1, 3)``; the empty tuple is the constant monomial. Coefficients are any
exact ring elements (``Fraction``, ``QRat``, ``UCoeff``, ``UPoly``).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, Tuple

__all__ = ["CenterPoly", "Monomial"]

Monomial = Tuple[int, ...]

KINDS = ("C", "p", "S", "e")


def _merge(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


class CenterPoly:
    """Sparse polynomial in one family of indexed symbols."""

    __slots__ = ("kind", "terms")

    def __init__(self, kind: str = "C", terms: Dict[Monomial, object] | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown symbol kind {kind!r}")
        self.kind = kind
        self.terms = {}
        for k, v in (terms or {}).items():
            if v:
                self.terms[tuple(sorted(k))] = v

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, kind="C"):
        return cls(kind, {(): c})

    @classmethod
    def var(cls, k: int, kind="C", coeff=None):
        if k == 0:
            raise ValueError("symbol indices start at 1")
        return cls(kind, {(k,): Fraction(1) if coeff is None else coeff})

    @classmethod
    def monomial(cls, mono, kind="C", coeff=None):
        return cls(kind, {tuple(mono): Fraction(1) if coeff is None else coeff})

    # -- ring -------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, CenterPoly):
            if other.kind != self.kind and other.terms and self.terms:
                if set(other.terms) != {()} and set(self.terms) != {()}:
                    raise ValueError(f"cannot mix {self.kind}- and {other.kind}-symbols")
            return other
        return CenterPoly(self.kind, {(): other})

    def __add__(self, other):
        o = self._lift(other)
        kind = self.kind if any(self.terms) else o.kind
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return CenterPoly(kind, out)

    __radd__ = __add__

    def __neg__(self):
        return CenterPoly(self.kind, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, CenterPoly):
            if not other:
                return CenterPoly(self.kind)
            return CenterPoly(self.kind, {k: v * other for k, v in self.terms.items()})
        o = self._lift(other)
        kind = self.kind if any(self.terms) else o.kind
        out: Dict[Monomial, object] = {}
        for a, x in self.terms.items():
            for b, y in o.terms.items():
                k = _merge(a, b)
                v = x * y
                out[k] = out[k] + v if k in out else v
        return CenterPoly(kind, out)

    def __rmul__(self, other):
        if not other:
            return CenterPoly(self.kind)
        return CenterPoly(self.kind, {k: other * v for k, v in self.terms.items()})

    def __truediv__(self, c):
        return CenterPoly(self.kind, {k: v / c for k, v in self.terms.items()})

    def __rtruediv__(self, other):
        if set(self.terms) != {()}:
            return NotImplemented
        return CenterPoly(self.kind, {(): other / self.terms[()]})

    def __pow__(self, n: int):
        result = CenterPoly(self.kind, {(): Fraction(1)})
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, CenterPoly):
            if self.kind != other.kind and any(self.terms) and any(other.terms):
                return False
            return _terms_equal(self.terms, other.terms)
        return _terms_equal(self.terms, {(): other} if other else {})

    def __hash__(self):
        return hash((self.kind, frozenset(self.terms)))

    def __bool__(self):
        return bool(self.terms)

    # -- structure --------------------------------------------------------

    def degree(self) -> int:
        """Weighted degree (deg X_k = k)."""
        return max((sum(k) for k in self.terms), default=-1)

    def max_index(self) -> int:
        return max((max(k) for k in self.terms if k), default=0)

    def coefficient(self, mono):
        return self.terms.get(tuple(sorted(mono)), 0)

    def map_coeffs(self, fn: Callable):
        return CenterPoly(self.kind, {k: fn(v) for k, v in self.terms.items()})

    def relabel(self, kind: str):
        return CenterPoly(kind, self.terms)

    def evaluate(self, images: Dict[int, object] | Callable, one=None):
        """Substitute each symbol X_k by ``images[k]`` (any ring element) and sum.

        Powers are cached per index; ``one`` is the unit of the target ring.
        """
        get = images if callable(images) else images.__getitem__
        cache: Dict[Tuple[int, int], object] = {}

        def power(k, e):
            key = (k, e)
            if key not in cache:
                cache[key] = get(k) if e == 1 else power(k, e - 1) * get(k)
            return cache[key]

        total = None
        for mono, c in self.terms.items():
            if mono:
                val = None
                for k, e in sorted(Counter(mono).items()):
                    p = power(k, e)
                    val = p if val is None else val * p
                term = val * c
            else:
                if one is None:
                    raise ValueError("a unit element is needed for the constant term")
                term = one * c
            total = term if total is None else total + term
        if total is None:
            if one is None:
                raise ValueError("empty polynomial needs a unit element")
            return one * 0
        return total

    def substitute(self, images: Dict[int, "CenterPoly"]):
        """Substitute symbols by CenterPolys (possibly of a different kind)."""
        kind = next(iter(images.values())).kind if images else self.kind
        return self.evaluate(images, one=CenterPoly(kind, {(): Fraction(1)}))

    def sorted_terms(self):
        """Terms ordered by descending weighted degree, then descending monomial."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-i for i in reversed(kv[0]))))

    def __repr__(self):
        from .render import render_center

        return render_center(self)

    __str__ = __repr__


def _terms_equal(a, b):
    keys = set(a) | set(b)
    for k in keys:
        x = a.get(k, 0)
        y = b.get(k, 0)
        if isinstance(x, int) and not isinstance(y, int):
            x, y = y, x
        if not (x == y):
            if not (x - y == 0 if hasattr(x, "__sub__") else False):
                return False
    return True
