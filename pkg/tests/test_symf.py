"""Symmetric polynomials, Harish-Chandra images and the Schur substitution."""

from __future__ import annotations

from fractions import Fraction

import pytest

from qweight.centerpoly import CenterPoly
from qweight.coeff import LAMBDA, QRat, UPoly, eval_q1, qdim
from qweight.series import Series
from qweight.symf import (
    SymPoly,
    classical_casimir_hc,
    hc_image,
    one_part_schur,
    qcasimir_hc,
    qpower_sum_hc,
    schur_substitution,
    shifted_schur_expand,
)
from qweight.wsys import p_in_c

x = SymPoly.variable


def test_one_part_schur_small():
    assert one_part_schur(1, 3) == x(0, 3) + x(1, 3) + x(2, 3)
    x1, x2 = x(0, 2), x(1, 2)
    assert one_part_schur(2, 2) == x1 * x1 + x1 * x2 + x2 * x2
    assert one_part_schur(0, 2) == SymPoly.const(Fraction(1), 2)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_one_part_schur_generating_identity(N):
    order = 5
    one = SymPoly.const(Fraction(1), N)
    prod = Series([one], order)
    for i in range(N):
        prod = prod * Series([one] + [x(i, N) ** k for k in range(1, order + 1)], order)
    assert all(prod[k] == one_part_schur(k, N) for k in range(1, order + 1))


def test_qpower_sum_one_variable():
    xi = SymPoly.variable(0, 1, "xi")
    for m in range(1, 5):
        assert qpower_sum_hc(m, 1) == xi ** m * QRat.q(-1)


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_quantum_casimir_limit(m, N):
    q = qcasimir_hc(m, N)
    assert q.map_coeffs(eval_q1) == classical_casimir_hc(m, N)
    assert q.degree() == m and classical_casimir_hc(m, N).degree() == m
    assert q.is_symmetric()


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_p_and_c_images_agree(m, N):
    assert hc_image(p_in_c(m, N)[m], N) == qpower_sum_hc(m, N).to_x()


@pytest.mark.parametrize("N", [1, 2, 3])
def test_c1_from_p1(N):
    c1 = (SymPoly.const(qdim(N), N) - qpower_sum_hc(1, N).to_x()) / LAMBDA
    assert c1 == qcasimir_hc(1, N)


def test_classical_c1():
    for N in (1, 2, 3):
        assert classical_casimir_hc(1, N) == one_part_schur(1, N)


@pytest.mark.parametrize("N", [2, 3])
def test_schur_substitution(N):
    cs = schur_substitution("C_from_S", 3, N)
    for m in range(1, 4):
        assert hc_image(cs[m], N, quantum=False) == classical_casimir_hc(m, N)
    sc = schur_substitution("S_from_C", 4, N)
    cs4 = schur_substitution("C_from_S", 4, N)
    for m in range(1, 5):
        assert sc[m].substitute(cs4) == CenterPoly.var(m, "S")
        assert cs4[m].substitute(sc) == CenterPoly.var(m, "C")


def test_schur_substitution_formal_n():
    cs = schur_substitution("C_from_S", 2, None)
    n = UPoly.variable("N")
    assert cs[1] == CenterPoly.var(1, "S", UPoly((1,)))
    # with S_i = 0 only the prefactor survives: C_2 -> -(N^3 - N)/12
    const = cs[2].coefficient(())
    assert const == (n ** 3 - n) * Fraction(-1, 12)
    for N in (2, 3, 4):
        assert const(N) == schur_substitution("C_from_S", 2, N)[2].coefficient(())


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("m", range(1, 5))
def test_shifted_schur_identity(m, N):
    assert not shifted_schur_expand(m, QRat.q(1 - N), N)
    assert not shifted_schur_expand(m, Fraction(0), N)


def test_variable_change_round_trip():
    s = qcasimir_hc(2, 2)
    assert s.to_xi().to_x() == s
    assert s.to_xi().var == "xi"
