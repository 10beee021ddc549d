"""Exact coefficient rings, q-numbers and the q -> 1 limit."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweight.coeff import (
    LAMBDA,
    PoleAtOne,
    QRat,
    UCoeff,
    eval_q1,
    falling,
    qdim,
    qfalling,
    qint,
    substitute_w,
)

small = st.integers(min_value=-4, max_value=4)
laurent = st.dictionaries(st.integers(min_value=-3, max_value=3), small, max_size=3)


@st.composite
def qrats(draw):
    num = QRat.laurent(draw(laurent))
    den = QRat.laurent(draw(laurent))
    if not den:
        den = QRat(1)
    return num / den


def test_qint_small_values():
    assert qint(1) == 1
    assert qint(2) == 1 + QRat.q(-2)
    assert qint(3) == 1 + QRat.q(-2) + QRat.q(-4)
    assert qint(0) == 0


@pytest.mark.parametrize("N", range(1, 6))
def test_trace_of_d_matches_qint(N):
    trace_d = sum((QRat.q(1 - 2 * N + 2 * a) for a in range(N)), QRat())
    assert QRat.q(-1) * qint(N) == trace_d
    assert qdim(N) == trace_d


def test_half_integer_qint():
    x = qint(Fraction(1, 2))
    assert x == (1 - QRat.q(-1)) / (1 - QRat.q(-2))
    # [1/2] = q/(q + 1) is a genuine rational function
    assert x == QRat.q() / (QRat.q() + 1)
    assert not x.is_laurent()
    assert eval_q1(x) == Fraction(1, 2)
    assert qint(Fraction(-3, 2)) == (1 - QRat.q(3)) / (1 - QRat.q(-2))


def test_qfalling():
    assert qfalling(3, 0) == 1
    assert qfalling(2, 2) == (1 + QRat.q(-2))
    for a in range(7):
        for b in range(a + 1):
            assert eval_q1(qfalling(a, b)) == falling(a, b)


def test_eval_q1_examples():
    for n in range(1, 9):
        assert eval_q1(qint(n)) == n
    x = (QRat.q() - QRat.q(-1)) / (QRat.q(2) - 1)
    assert x == QRat.q(-1)
    assert eval_q1(x) == 1
    with pytest.raises(PoleAtOne):
        eval_q1(1 / (QRat.q() - 1))


def test_canonical_form_and_str():
    a = (QRat.q(2) - 1) / (QRat.q() - 1)
    assert a == QRat.q() + 1
    assert str(a) == "1 + q"
    assert not (a - a)
    assert str(1 / (QRat.q(2) + 1)) == "1/(q^2 + 1)"
    r = QRat.q(-1) * qint(3)
    assert str(r) == "q^-1 + q^-3 + q^-5"


def test_substitute_w():
    assert substitute_w(UCoeff.w(2), 3) == QRat.q(-6)
    c = QRat(7) / 3
    assert substitute_w(UCoeff(c), 4) == c
    for N in range(1, 6):
        u = (UCoeff(1) - UCoeff.w(2)) / (1 - QRat.q(-2))
        assert substitute_w(u, N) == qint(N)
        assert substitute_w(qdim(None), N) == qdim(N)


@settings(max_examples=60, deadline=None)
@given(qrats(), qrats(), qrats())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert not (a - a)
    if a:
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=-6, max_value=6), st.integers(min_value=-6, max_value=6))
def test_qint_shift_identity(a2, b2):
    a, b = Fraction(a2, 2), Fraction(b2, 2)
    assert qint(a + b) == qint(a) * QRat.q(-b2) + qint(b)


@settings(max_examples=60, deadline=None)
@given(qrats(), qrats())
def test_eval_q1_is_a_homomorphism(a, b):
    try:
        ea, eb = eval_q1(a), eval_q1(b)
    except PoleAtOne:
        return
    assert eval_q1(a + b) == ea + eb
    assert eval_q1(a * b) == ea * eb


def test_lambda():
    assert LAMBDA == QRat.q() - QRat.q(-1)
