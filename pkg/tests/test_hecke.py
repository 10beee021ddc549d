"""Hecke algebra arithmetic, normal codes, quantum trace and the q-symmetrizer."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweight.coeff import LAMBDA, QRat, UCoeff, eval_q1, qdim, qint
from qweight.hecke import (
    HeckeElt,
    IndexOutOfRange,
    SizeMismatch,
    all_perms,
    code_of,
    concat,
    gen_mul,
    monomial_inverse,
    mul,
    parse_perm,
    parse_word,
    perm_of_code,
    qsymmetrizer,
    qtrace,
)

g = HeckeElt.gen


def test_quadratic_relation():
    assert gen_mul("left", 1, HeckeElt.one(2)) == g(1, 2)
    assert gen_mul("left", 1, g(1, 2)) == HeckeElt.one(2) + g(1, 2).scale(LAMBDA)


def test_braid_and_commuting_relations_on_h4():
    for s in all_perms(4):
        x = HeckeElt.basis(s)
        for i in (1, 2, 3):
            sq = gen_mul("left", i, gen_mul("left", i, x))
            assert sq == x + gen_mul("left", i, x).scale(LAMBDA)
        for i in (1, 2):
            lhs = gen_mul("left", i, gen_mul("left", i + 1, gen_mul("left", i, x)))
            rhs = gen_mul("left", i + 1, gen_mul("left", i, gen_mul("left", i + 1, x)))
            assert lhs == rhs
        assert gen_mul("right", 1, gen_mul("right", 3, x)) == gen_mul("right", 3, gen_mul("right", 1, x))


def test_errors():
    with pytest.raises(IndexOutOfRange):
        gen_mul("left", 3, HeckeElt.one(3))
    with pytest.raises(SizeMismatch):
        mul(HeckeElt.one(2), HeckeElt.one(3))


def test_inverse_of_generator():
    inv = HeckeElt.gen_inv(1, 2)
    assert inv == g(1, 2) - HeckeElt.one(2, LAMBDA)
    assert g(1, 2) * inv == HeckeElt.one(2)
    assert monomial_inverse((2, 1)) == inv
    assert monomial_inverse((1, 2, 3)) == HeckeElt.one(3)


def test_monomial_inverse_on_h4():
    for s in all_perms(4):
        assert monomial_inverse(s) * HeckeElt.basis(s) == HeckeElt.one(4)


def test_normal_code():
    assert code_of((3, 1, 2)) == (1, 2, 1)
    assert HeckeElt.from_code((1, 2, 1)) == HeckeElt.word([2, 1], 3)
    for m in range(1, 7):
        for s in all_perms(m):
            assert perm_of_code(code_of(s)) == s


def test_concat():
    assert concat(g(1, 2), g(1, 2)) == HeckeElt.word([1, 3], 4)
    x = HeckeElt.word([2, 1], 3)
    assert concat(HeckeElt.one(1), x) == HeckeElt.word([3, 2], 4)


h2_elems = st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2).map(
    lambda c: HeckeElt.one(2, QRat(c[0])) + g(1, 2).scale(QRat(c[1]) * QRat.q(c[0]))
)


@settings(max_examples=25, deadline=None)
@given(h2_elems, h2_elems, h2_elems, h2_elems)
def test_concat_is_homomorphism(a, b, c, d):
    assert concat(a * b, c * d) == concat(a, c) * concat(b, d)


def test_qtrace_examples():
    d = qdim(None)
    x = HeckeElt.word([2, 1], 3)
    assert qtrace(x.embed(4)) == x.scale(d)
    for m in range(2, 5):
        assert qtrace(g(m - 1, m)) == HeckeElt.one(m - 1)
    val = qtrace(HeckeElt.gen_inv(3, 4))
    assert val == HeckeElt.one(3, UCoeff.w(2))
    assert qtrace(HeckeElt.gen_inv(3, 4), 2) == HeckeElt.one(3, QRat.q(-4))


def test_qtrace_module_property():
    for s, t in product(all_perms(3), all_perms(4)):
        x, y = HeckeElt.basis(s), HeckeElt.basis(t)
        assert qtrace(x.embed(4) * y) == x * qtrace(y)
        assert qtrace(y * x.embed(4)) == qtrace(y) * x


def test_qsymmetrizer_small():
    assert qsymmetrizer(1) == HeckeElt.one(1)
    h2 = (HeckeElt.one(2, QRat.q(-2)) + g(1, 2).scale(QRat.q(-1))) / qint(2)
    assert qsymmetrizer(2) == h2


@pytest.mark.parametrize("m", range(1, 6))
def test_qsymmetrizer_central_idempotent(m):
    h = qsymmetrizer(m)
    assert h * h == h
    for i in range(1, m):
        assert g(i, m) * h == h * g(i, m)
        # g_i h = q h
        assert g(i, m) * h == h.scale(QRat.q())


@pytest.mark.parametrize("m", range(1, 5))
def test_qsymmetrizer_limit_is_uniform(m):
    h = qsymmetrizer(m)
    assert len(h.terms) == len(all_perms(m))
    assert all(eval_q1(c) == Fraction(1, len(h.terms)) for c in h.terms.values())


def test_parsing():
    assert parse_word("g1 g3*g2^-1") == [1, 3, -2]
    assert parse_perm("[2,1,4,3]") == (2, 1, 4, 3)
    with pytest.raises(ValueError):
        parse_word("h1")
    with pytest.raises(ValueError):
        parse_perm("[1,1]")


def test_str():
    assert str(g(1, 2) * g(1, 2)) == "1 + (q - q^-1)*g1"
