"""
The universal characteristic map chi, the universal quantum gl-weight system
omega, their interconversion, and the average values built on top of them.

Both maps are evaluated by the conjugation algorithm on Hecke monomials: a
basis element ``C_{j,m} T_w`` (``w`` in ``S_j``) either has ``w`` fixing ``j``, in
which case it is a concatenation and the value factors, or ``T_w = x g_{j-1} y``
and the element is ``x C_{i,m}``. Moving ``x`` to the right costs nothing for
chi (trace property) and a quantum-trace correction in H_{m-1} for omega.

``N=None`` selects the universal mode (coefficients are Laurent polynomials in
``w = q^{-N}``); an integer ``N`` works over rational functions of ``q``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

from .centerpoly import CenterPoly
from .coeff import LAMBDA, PoleAtOne, QRat, UCoeff, eval_q1, falling, qdim, qfactorial, qfalling, qint, substitute_w
from .hecke import (
    HeckeElt,
    Perm,
    _cycle_word,
    compose,
    gen_mul,
    identity as identity_perm,
    inverse_perm,
    qsymmetrizer,
    qtrace,
    word_perm,
)
from .qbern import classical_bernoulli, qbernoulli
from .series import Series
from .symf import SymPoly, one_part_schur

__all__ = [
    "chi",
    "omega",
    "omega_via_chi",
    "p_to_c",
    "c_to_p",
    "p_in_c",
    "c_in_p",
    "omega_average_direct",
    "omega_average_char",
    "omega_average_closed",
    "symmetrizer_trace_scalars",
    "avg_formula_quantum",
    "avg_formula_classical",
    "qimm_via_ws",
    "qimm_hc",
    "wimm_hc",
    "wimm_via_ws",
    "limit_q1_center",
    "limit_q1_sym",
]


def _one(N):
    return UCoeff(1) if N is None else QRat(1)


# ---------------------------------------------------------------------------
# the reduction algorithm

def _split(w: Perm):
    """For w in S_j not fixing j: (x, i) with T_w = T_x g_{j-1} C_{i,j-1}, x in S_{j-1}."""
    j = len(w)
    i = inverse_perm(w)[j - 1]
    c = word_perm(_cycle_word(i, j), j)
    x = compose(w, inverse_perm(c))
    return x[: j - 1], i


def _prefix_word(x: Perm):
    from .hecke import reduced_word

    return reduced_word(x)


def _run_value(kind, length_):
    return CenterPoly.var(length_, kind)


@lru_cache(maxsize=None)
def _state_value(kind: str, N, m: int, j: int, w: Perm) -> CenterPoly:
    """Value of chi (kind 'p') or omega (kind 'C') on C_{j,m} T_w in H_m, w in S_j."""
    if j == 0:
        return CenterPoly.const(_one(N), kind)
    if w[j - 1] == j:
        rest = _state_value(kind, N, j - 1, j - 1, w[: j - 1])
        return rest * _run_value(kind, m - j + 1)
    x, i = _split(w)
    # C_{j,m} x g_{j-1} C_{i,j-1} = x C_{i,m}; conjugate x to the right
    total = CenterPoly(kind)
    terms = _yx_expansion(i, j, x)
    for u, c in terms.items():
        total = total + _state_value(kind, N, m, j - 1, u) * c
    if kind == "C":
        word = _prefix_word(x)
        if word:
            total = total + _omega_corrections(N, m, i, word)
    return total


@lru_cache(maxsize=None)
def _yx_expansion(i, j, x):
    """C_{i,j-1} T_x expanded in the basis of H_{j-1}."""
    cur = HeckeElt.basis(x)
    for a in reversed(_cycle_word(i, j - 1)):
        cur = gen_mul("left", a, cur)
    return cur.terms


def _z_elt(i, m):
    return HeckeElt.word(_cycle_word(i, m), m)


def _omega_corrections(N, m, i, word):
    """Sum of corr(a_t, g_{a_{t+1}}..g_{a_r} Z g_{a_1}..g_{a_{t-1}}), Z = C_{i,m}."""
    r = len(word)
    total = CenterPoly("C")
    z = _z_elt(i, m)
    for t in range(r):
        xx = z
        for a in reversed(word[t + 1:]):
            xx = gen_mul("left", a, xx)
        for a in word[:t]:
            xx = gen_mul("right", a, xx)
        total = total + _correction(N, word[t], xx)
    return total


def _conj_inverse_chain(X: HeckeElt, start: int):
    """(g_start ... g_{m-1})^{-1} X (g_start ... g_{m-1})."""
    m = X.m
    for a in range(start, m):
        # X -> g_a^{-1} X g_a
        X = gen_mul("right", a, X)
        X = gen_mul("left", a, X) - X.scale(LAMBDA)
    return X


def _correction(N, i, X: HeckeElt) -> CenterPoly:
    """omega_{m-1}(Tr_m(A - B)) for the swap move at generator i."""
    A = _conj_inverse_chain(X, i + 1)
    B = _conj_inverse_chain(X, i)
    return omega(qtrace(A - B, N), N)


def _eval(kind, x: HeckeElt, N) -> CenterPoly:
    m = x.m
    total = CenterPoly(kind)
    for s, c in x.terms.items():
        total = total + _state_value(kind, N, m, m, s) * c
    return total


def _as_ring(x: HeckeElt, N):
    if N is None:
        return x
    # fixed N: universal coefficients collapse to rational functions
    return x.map_coeffs(lambda c: substitute_w(c, N) if isinstance(c, UCoeff) else c)


def chi(x: HeckeElt, N=None) -> CenterPoly:
    """Universal characteristic map chi_m(x) in p-symbols."""
    return _eval("p", _as_ring(x, N), N)


def omega(x: HeckeElt, N=None) -> CenterPoly:
    """Quantum weight system omega_m(x) in C-symbols (universal if N is None)."""
    out = _eval("C", _as_ring(x, N), N)
    if N is None:
        for c in out.terms.values():
            if isinstance(c, UCoeff):
                assert all(k % 2 == 0 for k in c.terms), "odd power of q^-N in universal value"
    return out


# ---------------------------------------------------------------------------
# p <-> C

@lru_cache(maxsize=None)
def p_in_c(order: int, N=None):
    """{n: p_n as a CenterPoly in C}, n = 1..order."""
    d = qdim(N)
    lam = LAMBDA
    # p_n = (-lam)^n n! [t^n] e^{-t/lam}(d + sum C_m t^m / m!)
    one = CenterPoly.const(Fraction(1), "C")
    f = Series([one * d] + [CenterPoly.var(k, "C") / factorial(k) for k in range(1, order + 1)], order)
    e = Series.exp_t(order, -1 / lam)
    g = f * e
    return {n: g[n] * ((-lam) ** n * factorial(n)) for n in range(1, order + 1)}


@lru_cache(maxsize=None)
def c_in_p(order: int, N=None):
    """{n: C_n as a CenterPoly in p}, n = 1..order."""
    d = qdim(N)
    lam = LAMBDA
    one = CenterPoly.const(Fraction(1), "p")
    f = Series(
        [one * d]
        + [CenterPoly.var(k, "p") * ((-1) ** k / (factorial(k) * lam ** k)) for k in range(1, order + 1)],
        order,
    )
    g = f * Series.exp_t(order, 1 / lam)
    return {n: g[n] * factorial(n) for n in range(1, order + 1)}


def p_to_c(x: CenterPoly, order=None, N=None) -> CenterPoly:
    """Rewrite a p-polynomial in C-symbols."""
    if x.kind != "p" and any(x.terms):
        raise ValueError("p_to_c expects p-symbols")
    order = max(order or 0, x.max_index(), 1)
    return x.substitute(p_in_c(order, N))


def c_to_p(x: CenterPoly, order=None, N=None) -> CenterPoly:
    if x.kind != "C" and any(x.terms):
        raise ValueError("c_to_p expects C-symbols")
    order = max(order or 0, x.max_index(), 1)
    return x.substitute(c_in_p(order, N))


# ---------------------------------------------------------------------------

def _box(i, l):
    """C_{l,i} = g_{i-1}...g_l as a word (empty for i = l)."""
    return _cycle_word(l, i)


def omega_via_chi(x: HeckeElt, N: int) -> CenterPoly:
    """omega through chi: alternating sum over subsets of conjugated iterated traces."""
    if N is None:
        raise ValueError("omega_via_chi works at a fixed integer N")
    m = x.m
    x = _as_ring(x, N)
    total = CenterPoly("p")
    for k in range(m + 1):
        for I in combinations(range(1, m + 1), k):
            word = []
            for l, i in enumerate(I, 1):
                word += _box(i, l)
            inv = [-a for a in reversed(word)]
            y = HeckeElt.word(inv, m) * x * HeckeElt.word(word, m)
            for _ in range(m - k):
                y = qtrace(y, N)
            val = chi(y, N) if k else CenterPoly.const(y.terms.get((), QRat(0)), "p")
            total = total + val * (-1) ** k
    total = total / LAMBDA ** m
    return p_to_c(total, m, N)


def omega_average_direct(m: int, N=None) -> CenterPoly:
    """Omega_m = omega(h_m)."""
    return omega(qsymmetrizer(m), N)


def limit_q1_center(x: CenterPoly, N: int) -> CenterPoly:
    """Coefficient-wise q -> 1 limit (after fixing N)."""
    out = {}
    for mono, c in x.terms.items():
        c = substitute_w(c, N) if isinstance(c, UCoeff) else c
        try:
            out[mono] = eval_q1(c)
        except PoleAtOne as exc:
            raise PoleAtOne(f"coefficient of {mono} has a pole at q = 1: {exc}") from exc
    return CenterPoly(x.kind, out)


def limit_q1_sym(s: SymPoly) -> SymPoly:
    """Coefficient-wise q -> 1 limit of a symmetric polynomial."""
    return SymPoly(s.N, {k: eval_q1(v) for k, v in s.terms.items()}, s.var)


# ---------------------------------------------------------------------------
# average values through the characteristic map

def _schur(k, N, var="x"):
    return one_part_schur(k, N, var) if k else SymPoly.const(Fraction(1), N, var)


class NotProportional(ArithmeticError):
    """An iterated trace of a q-symmetrizer failed to be a multiple of the smaller one."""


@lru_cache(maxsize=None)
def symmetrizer_trace_scalars(m: int, N: int):
    """(c_0, ..., c_m) with <h_m>_{k+1..m} = c_k h_k, found by explicit tracing."""
    y = _as_ring(qsymmetrizer(m), N)
    out = [QRat(1)]
    for k in range(m - 1, -1, -1):
        y = qtrace(y, N)
        target = _as_ring(qsymmetrizer(k), N) if k else HeckeElt.one(0)
        c = y.terms.get(identity_perm(k), QRat(0)) / target.terms[identity_perm(k)]
        if y != target.scale(c):
            raise NotProportional(f"trace of h_{m} down to H_{k}")
        out.append(c)
    return tuple(reversed(out))


def omega_average_char(m: int, N: int) -> SymPoly:
    """Omega_m in x via omega = lam^{-m} sum_k (-1)^k binom(m,k) chi_k(<h_m>_{k+1..m}) and chi(h_k) = q^{-k} S_k(xi)."""
    if N is None:
        raise ValueError("omega_average_char works at a fixed integer N")
    scal = symmetrizer_trace_scalars(m, N)
    total = SymPoly(N, {}, "xi")
    for k in range(m + 1):
        total = total + _schur(k, N, "xi") * (scal[k] * QRat.q(-k) * (comb(m, k) * (-1) ** k))
    return (total / LAMBDA ** m).to_x()


def omega_average_closed(m: int, N: int) -> SymPoly:
    """(q^2-1)^{-m} sum_k (-1)^k binom(m,k) ([nu+m])_{m-k}/([m])_{m-k} S_k(xi), in x."""
    nu = N - 1
    total = SymPoly(N, {}, "xi")
    for k in range(m + 1):
        c = qfalling(nu + m, m - k) / qfalling(m, m - k)
        total = total + _schur(k, N, "xi") * (c * (comb(m, k) * (-1) ** k))
    return (total / (QRat.q(2) - 1) ** m).to_x()


def avg_formula_quantum(m: int, N: int) -> SymPoly:
    """Closed form of Omega_m through q-Bernoulli polynomials beta_l^{(nu+m-l, nu)}(nu/2)."""
    if N is None or N < 1:
        raise ValueError("N must be a positive integer")
    nu = N - 1
    pre = QRat(Fraction(factorial(m), factorial(nu + m))) * qfactorial(nu + m) / qfactorial(m)
    total = SymPoly(N, {}, "x")
    for l in range(m + 1):
        b = qbernoulli(l, nu + m - l, nu, Fraction(nu, 2))
        total = total + _schur(m - l, N) * (b * QRat.q(-2 * l) * Fraction(falling(nu + m, l), factorial(l)))
    return total * pre


def avg_formula_classical(m: int, N: int) -> SymPoly:
    """W_m = sum_l ((nu+m)_l / l!) B_l^{(nu)}(nu/2) S_{m-l}."""
    if N is None or N < 1:
        raise ValueError("N must be a positive integer")
    nu = N - 1
    total = SymPoly(N, {}, "x")
    for l in range(m + 1):
        c = classical_bernoulli(l, nu, Fraction(nu, 2)) * Fraction(falling(nu + m, l), factorial(l))
        total = total + _schur(m - l, N) * c
    return total


# ---------------------------------------------------------------------------
# hatted elements

def _elementary_values(values, k, one):
    total = one * 0
    for c in combinations(values, k):
        p = one
        for v in c:
            p = p * v
        total = total + p
    return total


def qimm_via_ws(m: int, N: int, averages=None) -> SymPoly:
    """Omega-hat_m = sum_k (-1)^k q^{-k} ([nu+m])_k/([m])_k e_k Omega_{m-k}.

    e_k is elementary symmetric in q^{-1}[1], ..., q^{-1}[m-1]; the extra q^{-k}
    is the scalar of the quantum trace of the q-symmetrizer.
    """
    nu = N - 1
    averages = averages or omega_average_char
    vals = [QRat.q(-1) * qint(i) for i in range(1, m)]
    total = SymPoly(N, {}, "x")
    for k in range(m + 1):
        e = _elementary_values(vals, k, QRat(1))
        if not e:
            continue
        om = averages(m - k, N) if m - k else _schur(0, N)
        c = e * QRat.q(-k) * qfalling(nu + m, k) / qfalling(m, k) * (-1) ** k
        total = total + om * c
    return total


def _decreasing_chains(m, N):
    for idx in combinations_with_replacement(range(N, 0, -1), m):
        yield idx


def qimm_hc(m: int, N: int) -> SymPoly:
    """sum over N >= i_1 >= ... >= i_m >= 1 of prod_k (x_{i_k} - q^{-N-1}[nu/2 - i_k + k])."""
    nu = N - 1
    x = [SymPoly.variable(i, N) for i in range(N)]
    shift = QRat.q(-N - 1)
    total = SymPoly(N, {}, "x")
    for idx in _decreasing_chains(m, N):
        p = _schur(0, N)
        for k, i in enumerate(idx, 1):
            p = p * (x[i - 1] - shift * qint(Fraction(nu, 2) - i + k))
        total = total + p
    return total


def wimm_hc(m: int, N: int) -> SymPoly:
    """sum over N >= i_1 >= ... >= i_m >= 1 of prod_k (x_{i_k} - (N+1)/2 + i_k - k + 1)."""
    x = [SymPoly.variable(i, N) for i in range(N)]
    total = SymPoly(N, {}, "x")
    for idx in _decreasing_chains(m, N):
        p = _schur(0, N)
        for k, i in enumerate(idx, 1):
            p = p * (x[i - 1] - Fraction(N + 1, 2) + i - k + 1)
        total = total + p
    return total


def wimm_via_ws(m: int, N: int) -> SymPoly:
    """W-hat_m = sum_k (-1)^k e_k (nu+m)_k/(m)_k W_{m-k}, e_k elementary in 1..m-1."""
    nu = N - 1
    total = SymPoly(N, {}, "x")
    for k in range(m + 1):
        e = _elementary_values(range(1, m), k, 1)
        if not e:
            continue
        om = avg_formula_classical(m - k, N) if m - k else _schur(0, N)
        total = total + om * (e * Fraction(falling(nu + m, k), falling(m, k)) * (-1) ** k)
    return total
