"""
Matrix oracles on tensor powers of C^N.

:class:`TensorOp` is an exact square matrix on ``(C^N)^{(x) F}``, stored
sparsely by rows. Basis vectors are multi-indices ``(a_1, ..., a_F)`` with
``0 <= a_s < N``; slot 1 is the most significant digit.

The quantum side uses the Drinfeld-Jimbo R-matrix and the R-trace with
``D = diag(q^{1-2N}, q^{3-2N}, ..., q^{-1})``; the classical side evaluates the
gl(N) weight system by contracting auxiliary slots against the K-fold tensor
representation, where ``E_{ab}`` acts as the sum of matrix units over the
slots.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Dict

from .coeff import LAMBDA, QRat, as_fraction
from .hecke import HeckeElt, Perm, all_perms, inverse_perm, qsymmetrizer, reduced_word

__all__ = [
    "TensorOp",
    "ScaleLimit",
    "SlotRange",
    "scale_cap",
    "dj_rmatrix",
    "r_matrix_at",
    "perm_op",
    "rho",
    "r_trace_partial",
    "partial_trace",
    "matrix_symmetrizers",
    "gl_generators",
    "gl_tensor_oracle",
    "casimir_operator",
    "classical_average_oracle",
    "operator_eval_center",
    "wimm_classical",
]

DEFAULT_CAP = 4096


class ScaleLimit(RuntimeError):
    """The requested operator would exceed the configured size cap."""


class SlotRange(IndexError):
    pass


def scale_cap() -> int:
    raw = os.environ.get("QWEIGHT_SCALE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _guard(N, slots):
    size = N ** slots
    cap = scale_cap()
    if size > cap:
        raise ScaleLimit(f"N^{slots} = {size} exceeds the cap {cap} (set QWEIGHT_SCALE_CAP to raise it)")


def _acc(d, k, v):
    if k in d:
        s = d[k] + v
        if s:
            d[k] = s
        else:
            del d[k]
    elif v:
        d[k] = v


def _digits(idx, N, F):
    out = [0] * F
    for s in range(F - 1, -1, -1):
        idx, out[s] = divmod(idx, N)
    return out


def _index(digits, N):
    idx = 0
    for a in digits:
        idx = idx * N + a
    return idx


class TensorOp:
    """Square matrix on an F-fold tensor power of an N-dimensional space."""

    __slots__ = ("N", "factors", "rows")

    def __init__(self, N: int, factors: int, rows=None):
        self.N = N
        self.factors = factors
        self.rows: Dict[int, Dict[int, object]] = {}
        for r, row in (rows or {}).items():
            row = {c: v for c, v in row.items() if v}
            if row:
                self.rows[r] = row

    @property
    def side(self):
        return self.N ** self.factors

    @classmethod
    def identity(cls, N, factors, one=None):
        one = Fraction(1) if one is None else one
        return cls(N, factors, {i: {i: one} for i in range(N ** factors)})

    @classmethod
    def zero(cls, N, factors):
        return cls(N, factors)

    @classmethod
    def local(cls, N, factors, slots, action):
        """Operator acting on the listed slots by ``action(digits) -> {digits: coeff}``."""
        rows: Dict[int, Dict[int, object]] = {}
        for col in range(N ** factors):
            d = _digits(col, N, factors)
            for new, c in action(tuple(d[s] for s in slots)).items():
                e = list(d)
                for s, a in zip(slots, new):
                    e[s] = a
                r = _index(e, N)
                rows.setdefault(r, {})
                _acc(rows[r], col, c)
        return cls(N, factors, rows)

    # -- algebra ----------------------------------------------------------

    def _check(self, other):
        if (self.N, self.factors) != (other.N, other.factors):
            raise ValueError("operator shapes differ")

    def __add__(self, other):
        if not isinstance(other, TensorOp):
            return self + TensorOp.identity(self.N, self.factors) * other
        self._check(other)
        rows = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            tgt = rows.setdefault(r, {})
            for c, v in row.items():
                _acc(tgt, c, v)
        return TensorOp(self.N, self.factors, rows)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TensorOp):
            return self.matmul(other)
        if not other:
            return TensorOp(self.N, self.factors)
        return TensorOp(self.N, self.factors, {r: {c: v * other for c, v in row.items()} for r, row in self.rows.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, c):
        return TensorOp(self.N, self.factors, {r: {k: v / c for k, v in row.items()} for r, row in self.rows.items()})

    def matmul(self, other):
        self._check(other)
        rows = {}
        orows = other.rows
        for r, row in self.rows.items():
            out: Dict[int, object] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if brow:
                    for c, b in brow.items():
                        _acc(out, c, a * b)
            if out:
                rows[r] = out
        return TensorOp(self.N, self.factors, rows)

    def __pow__(self, n):
        result = TensorOp.identity(self.N, self.factors)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        if (self.N, self.factors) != (other.N, other.factors):
            return False
        return not (self - other).rows

    __hash__ = None

    def is_zero(self):
        return not self.rows

    def entry(self, r, c):
        return self.rows.get(r, {}).get(c, 0)

    def map_entries(self, fn):
        return TensorOp(self.N, self.factors, {r: {c: fn(v) for c, v in row.items()} for r, row in self.rows.items()})

    def tensor_identity(self, extra: int):
        """X (x) I on ``extra`` additional trailing slots."""
        M = self.N ** extra
        rows = {}
        for r, row in self.rows.items():
            for t in range(M):
                rows[r * M + t] = {c * M + t: v for c, v in row.items()}
        return TensorOp(self.N, self.factors + extra, rows)

    def identity_tensor(self, extra: int):
        """I (x) X on ``extra`` additional leading slots."""
        S = self.side
        rows = {}
        for t in range(self.N ** extra):
            for r, row in self.rows.items():
                rows[t * S + r] = {t * S + c: v for c, v in row.items()}
        return TensorOp(self.N, self.factors + extra, rows)

    def to_dense(self):
        return [[self.entry(r, c) for c in range(self.side)] for r in range(self.side)]

    def __repr__(self):
        return f"TensorOp(N={self.N}, factors={self.factors}, nnz={sum(len(r) for r in self.rows.values())})"


# ---------------------------------------------------------------------------
# quantum side

def _r_action(N):
    q = QRat.q()

    def act(ab):
        a, b = ab
        if a == b:
            return {(a, a): q}
        out = {(b, a): QRat(1)}
        if a < b:
            out[(a, b)] = LAMBDA
        return out

    return act


def dj_rmatrix(N: int) -> TensorOp:
    """R = q sum E_ii(x)E_ii + sum_{i!=j} E_ij(x)E_ji + (q - q^{-1}) sum_{i<j} E_ii(x)E_jj."""
    return TensorOp.local(N, 2, (0, 1), _r_action(N))


@lru_cache(maxsize=None)
def r_matrix_at(i: int, m: int, N: int) -> TensorOp:
    """R_{i,i+1} on m slots."""
    if not 1 <= i < m:
        raise SlotRange(f"R_{{{i},{i + 1}}} on {m} slots")
    _guard(N, m)
    return TensorOp.local(N, m, (i - 1, i), _r_action(N))


@lru_cache(maxsize=None)
def _rho_basis(s: Perm, N: int) -> TensorOp:
    m = len(s)
    op = TensorOp.identity(N, m, QRat(1))
    for i in reduced_word(s):
        op = op * r_matrix_at(i, m, N)
    return op


def rho(x: HeckeElt, m: int | None = None, N: int = 2) -> TensorOp:
    """R-matrix representation g_i -> R_{i,i+1}."""
    m = x.m if m is None else m
    if m != x.m:
        raise ValueError("size mismatch")
    _guard(N, m)
    out = TensorOp(N, m)
    for s, c in x.terms.items():
        out = out + _rho_basis(s, N) * c
    return out


def d_diag(N: int):
    """Diagonal of D as QRat entries, index a = 0..N-1."""
    return [QRat.q(2 * a + 1 - 2 * N) for a in range(N)]


def partial_trace(X: TensorOp, k: int, n: int, weights=None) -> TensorOp:
    """Trace over slots k..n (1-based), each weighted by ``weights[a]`` if given."""
    F, N = X.factors, X.N
    if not 1 <= k <= n <= F:
        raise SlotRange(f"slots {k}..{n} of {F}")
    keep = [s for s in range(F) if not (k - 1 <= s <= n - 1)]
    rows: Dict[int, Dict[int, object]] = {}
    for r, row in X.rows.items():
        dr = _digits(r, N, F)
        traced = tuple(dr[k - 1:n])
        w = None
        if weights is not None:
            for a in traced:
                w = weights[a] if w is None else w * weights[a]
        rr = _index([dr[s] for s in keep], N)
        for c, v in row.items():
            dc = _digits(c, N, F)
            if tuple(dc[k - 1:n]) != traced:
                continue
            cc = _index([dc[s] for s in keep], N)
            tgt = rows.setdefault(rr, {})
            _acc(tgt, cc, v if w is None else w * v)
    return TensorOp(N, F - (n - k + 1), rows)


def r_trace_partial(X: TensorOp, k: int, n: int) -> TensorOp:
    """<X>_{k,n} = Tr_{k..n}(D_k ... D_n X)."""
    return partial_trace(X, k, n, d_diag(X.N))


def perm_op(alpha: Perm, N: int, one=None) -> TensorOp:
    """P_alpha(v_1 (x) ... (x) v_m) = v_{alpha^{-1}(1)} (x) ... (x) v_{alpha^{-1}(m)}."""
    m = len(alpha)
    _guard(N, m)
    inv = inverse_perm(alpha)
    one = Fraction(1) if one is None else one
    rows = {}
    for col in range(N ** m):
        d = _digits(col, N, m)
        new = [d[inv[s] - 1] for s in range(m)]
        rows[_index(new, N)] = {col: one}
    return TensorOp(N, m, rows)


@lru_cache(maxsize=None)
def matrix_symmetrizers(m: int, N: int):
    """(S^{(m)}, H^{(m)}): classical and quantum symmetrizers on m slots."""
    if m < 1:
        raise ValueError("m must be positive")
    _guard(N, m)
    if m == 1:
        S = TensorOp.identity(N, 1)
    else:
        prev = matrix_symmetrizers(m - 1, N)[0].tensor_identity(1)
        swap = perm_op(_transposition(m - 1, m), N)
        S = prev * (TensorOp.identity(N, m) + swap * (m - 1)) * prev / m
    H = rho(qsymmetrizer(m), m, N)
    return S, H


def _transposition(i, m):
    p = list(range(1, m + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


# ---------------------------------------------------------------------------
# classical side

@lru_cache(maxsize=None)
def gl_generators(N: int, K: int):
    """{(a, b): operator of E_{ab}} on the K-fold tensor power."""
    _guard(N, K)
    gens = {}
    for a in range(N):
        for b in range(N):
            def act(d, a=a, b=b):
                (x,) = d
                return {(a,): Fraction(1)} if x == b else {}

            op = TensorOp(N, K)
            for s in range(K):
                op = op + TensorOp.local(N, K, (s,), act)
            gens[(a, b)] = op
    return gens


def gl_tensor_oracle(alpha: Perm, m: int, N: int, K: int) -> TensorOp:
    """Classical weight system value: sum over a of prod_s E_{a_s, a_alpha(s)}."""
    return _shifted_oracle(tuple(alpha), m, N, K, tuple([0] * m))


def _shifted_oracle(alpha, m, N, K, shifts):
    """sum_a prod_s (E_{a_s a_alpha(s)} - shifts[s] delta) in slot order."""
    if len(alpha) != m:
        raise ValueError("permutation size differs from m")
    _guard(N, m + K)
    X = gl_generators(N, K)
    I = TensorOp.identity(N, K)
    total = TensorOp(N, K)
    for a in product(range(N), repeat=m):
        op = None
        for s in range(m):
            b = a[alpha[s] - 1]
            f = X[(a[s], b)]
            if shifts[s] and a[s] == b:
                f = f - I * shifts[s]
            op = f if op is None else op * f
        total = total + op
    return total


@lru_cache(maxsize=None)
def casimir_operator(k: int, N: int, K: int) -> TensorOp:
    """C_k = Tr(E^k) on the K-fold tensor power, by matrix powers of the generator matrix."""
    _guard(N, K + 1)
    X = gl_generators(N, K)
    if k == 0:
        return TensorOp.identity(N, K) * N
    Y = {key: v for key, v in X.items()}
    for _ in range(k - 1):
        Y = {
            (a, b): sum((Y[(a, c)] * X[(c, b)] for c in range(N)), TensorOp(N, K))
            for a in range(N)
            for b in range(N)
        }
    return sum((Y[(a, a)] for a in range(N)), TensorOp(N, K))


@lru_cache(maxsize=None)
def classical_average_oracle(m: int, N: int, K: int) -> TensorOp:
    """W_m(N) as an operator: uniform average of gl_tensor_oracle over S_m."""
    if m == 0:
        return TensorOp.identity(N, K)
    total = TensorOp(N, K)
    for alpha in all_perms(m):
        total = total + gl_tensor_oracle(alpha, m, N, K)
    return total / factorial(m)


def operator_eval_center(poly, N: int, K: int) -> TensorOp:
    """Evaluate a C-polynomial (or an S-polynomial, through the Schur substitution) at Casimir operators."""
    from .symf import schur_substitution

    if poly.kind == "S" and poly.max_index():
        poly = poly.substitute(schur_substitution("S_from_C", poly.max_index(), N))
    if poly.kind not in ("C", "S"):
        raise ValueError("operator evaluation needs C- or S-symbols")
    poly = poly.map_coeffs(as_fraction)
    imgs = {k: casimir_operator(k, N, K) for k in range(1, max(poly.max_index(), 1) + 1)}
    return poly.evaluate(imgs, one=TensorOp.identity(N, K))


def _elementary_values(values, k):
    from itertools import combinations

    total = 0
    for c in combinations(values, k):
        p = 1
        for v in c:
            p *= v
        total += p
    return total


def wimm_classical(m: int, N: int, K: int):
    """Hatted W_m two ways: (direct shifted contraction, triangular combination of W_j)."""
    nu = N - 1
    shifts = tuple(range(m))  # E_1 (E_2 - 1) ... (E_m - m + 1)
    direct = TensorOp(N, K)
    for alpha in all_perms(m):
        direct = direct + _shifted_oracle(alpha, m, N, K, shifts)
    direct = direct / factorial(m)
    tri = TensorOp(N, K)
    for k in range(m + 1):
        e = _elementary_values(range(1, m), k)
        coef = Fraction((-1) ** k * e)
        for j in range(k):
            coef *= Fraction(nu + m - j, m - j)
        tri = tri + classical_average_oracle(m - k, N, K) * coef
    return direct, tri
