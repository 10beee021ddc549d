from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from qweight.coeff import QRat, eval_q1, falling, qfalling, qint
from qweight.qbern import (
    NegativePower,
    QBernParams,
    classical_bernoulli,
    phi,
    qbernoulli,
    qbernoulli_via_phi,
)

XI = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)]


def test_params():
    with pytest.raises(ValueError):
        QBernParams(1, 1, 2)
    with pytest.raises(ValueError):
        QBernParams(1, 2, 1, Fraction(1, 3))
    assert QBernParams(2, 3, 2, 1).z_xi == QRat.q(-2)


def test_degree_zero():
    for h in range(1, 5):
        for k in range(1, h + 1):
            assert qbernoulli(0, h, k, 0) == QRat(falling(h, k)) / qfalling(h, k)


def test_first_number():
    b = qbernoulli(1, 1, 1, 0)
    assert b == -1 / (1 + QRat.q(-2))
    assert eval_q1(b) == Fraction(-1, 2)


def test_phi():
    assert phi({0: QRat(1)}) == 1
    assert phi({1: QRat(1)}) == 2 / qint(2)
    assert phi({2: QRat(1)}) == 3 / qint(3)
    with pytest.raises(NegativePower):
        phi({-1: QRat(1)})


@pytest.mark.parametrize("xi", XI)
def test_phi_description(xi):
    for h in range(1, 5):
        for k in range(1, min(h, 3) + 1):
            for m in range(6):
                assert qbernoulli(m, h, k, xi) == qbernoulli_via_phi(m, h, k, xi)


def test_phi_single_monomial():
    for h in range(1, 5):
        assert qbernoulli_via_phi(0, h, 1, 0) == h / qint(h)


def test_classical_values():
    assert classical_bernoulli(0, 3, Fraction(2)) == 1
    assert classical_bernoulli(1, 1, 0) == Fraction(-1, 2)
    assert classical_bernoulli(2, 1, 0) == Fraction(1, 6)
    for nu in range(1, 5):
        assert classical_bernoulli(2, nu, Fraction(nu, 2)) == Fraction(-nu, 12)
        for j in range(4):
            assert classical_bernoulli(2 * j + 1, nu, Fraction(nu, 2)) == 0


@pytest.mark.parametrize("xi", XI[:3])
def test_limit_ladder(xi):
    for k in range(1, 4):
        for m in range(6):
            values = {eval_q1(qbernoulli(m, h, k, xi)) for h in range(k, 5)}
            assert values == {classical_bernoulli(m, k, xi)}


def test_polynomial_to_number_recursion():
    for xi in XI[:3]:
        br = (1 - QBernParams(0, 1, 1, xi).z_xi) / (1 - QRat.q(-2))
        for h in range(1, 5):
            for k in range(1, min(h, 3) + 1):
                for m in range(7):
                    rhs = sum((qbernoulli(m - i, h + i, k, 0) * br ** i * comb(m, i) for i in range(m + 1)), QRat())
                    assert qbernoulli(m, h, k, xi) == rhs
