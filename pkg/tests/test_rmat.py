"""R-matrix representation, R-trace and classical tensor oracles."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest

from qweight.centerpoly import CenterPoly
from qweight.coeff import LAMBDA, QRat, qdim, qint
from qweight.hecke import HeckeElt, all_perms, compose, qtrace
from qweight.rmat import (
    ScaleLimit,
    SlotRange,
    TensorOp,
    casimir_operator,
    classical_average_oracle,
    dj_rmatrix,
    gl_tensor_oracle,
    matrix_symmetrizers,
    operator_eval_center,
    partial_trace,
    perm_op,
    r_matrix_at,
    r_trace_partial,
    rho,
    wimm_classical,
)


@pytest.mark.parametrize("N", range(1, 5))
def test_hecke_relation(N):
    R = dj_rmatrix(N)
    assert R * R == TensorOp.identity(N, 2) + R * LAMBDA
    assert r_trace_partial(R, 2, 2) == TensorOp.identity(N, 1)


def test_scalar_rmatrix():
    assert dj_rmatrix(1).rows == {0: {0: QRat.q()}}


@pytest.mark.parametrize("N", range(1, 4))
def test_braid_relation(N):
    a, b = r_matrix_at(1, 3, N), r_matrix_at(2, 3, N)
    assert a * b * a == b * a * b


@pytest.mark.parametrize("N", range(1, 6))
def test_trace_normalization(N):
    assert r_trace_partial(TensorOp.identity(N, 1), 1, 1).rows == {0: {0: qdim(N)}}


def test_slot_range():
    with pytest.raises(SlotRange):
        r_trace_partial(TensorOp.identity(2, 2), 2, 3)
    with pytest.raises(SlotRange):
        r_matrix_at(3, 3, 2)


def test_rho_homomorphism():
    N = 2
    assert rho(HeckeElt.one(3), 3, N) == TensorOp.identity(N, 3)
    for s, t in product(all_perms(3), repeat=2):
        x, y = HeckeElt.basis(s), HeckeElt.basis(t)
        assert rho(x * y, 3, N) == rho(x, 3, N) * rho(y, 3, N)


def _random_op(N, m, rng):
    rows = {}
    for r in range(N ** m):
        for c in range(N ** m):
            if rng.random() < 0.3:
                rows.setdefault(r, {})[c] = QRat.q(rng.randint(-2, 2)) * rng.randint(-3, 3)
    return TensorOp(N, m, rows)


def test_r_trace_cyclic():
    rng = random.Random(7)
    for _ in range(3):
        X = _random_op(2, 3, rng)
        for i in (1, 2):
            R = r_matrix_at(i, 3, 2)
            assert r_trace_partial(X * R, 1, 3) == r_trace_partial(R * X, 1, 3)


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("m", [3, 4])
def test_qtrace_bridge(m, N):
    for s in all_perms(m):
        x = HeckeElt.basis(s)
        assert r_trace_partial(rho(x, m, N), m, m) == rho(qtrace(x, N), m - 1, N)


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_symmetrizers(m, N):
    nu = N - 1
    S, H = matrix_symmetrizers(m, N)
    Sp, Hp = matrix_symmetrizers(m - 1, N)
    assert S * S == S and H * H == H
    assert r_trace_partial(H, m, m) == Hp * (QRat.q(-1) * qint(nu + m) / qint(m))
    assert partial_trace(S, m, m) == Sp * Fraction(nu + m, m)
    for i in range(1, m):
        R = r_matrix_at(i, m, N)
        assert H * R == R * H


def test_s2():
    S, _ = matrix_symmetrizers(2, 2)
    assert S == (TensorOp.identity(2, 2) + perm_op((2, 1), 2)) / 2


def test_perm_op_composition():
    for a, b in product(all_perms(3), repeat=2):
        assert perm_op(a, 2) * perm_op(b, 2) == perm_op(compose(a, b), 2)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_casimirs(N):
    assert casimir_operator(1, N, 1) == TensorOp.identity(N, 1)
    assert casimir_operator(2, N, 1) == TensorOp.identity(N, 1) * N
    for K in (1, 2):
        ops = [casimir_operator(k, N, K) for k in (1, 2, 3)]
        for a, b in product(ops, repeat=2):
            assert a * b == b * a


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("K", [1, 2])
def test_tensor_oracle_small(N, K):
    C1, C2 = casimir_operator(1, N, K), casimir_operator(2, N, K)
    assert gl_tensor_oracle((1, 2), 2, N, K) == C1 * C1
    assert gl_tensor_oracle((2, 1), 2, N, K) == C2
    assert classical_average_oracle(1, N, K) == C1
    assert classical_average_oracle(2, N, K) == (C1 * C1 + C2) / 2
    poly = (CenterPoly.monomial((1, 1), "C", Fraction(1)) + CenterPoly.var(2, "C")) / 2
    assert operator_eval_center(poly, N, K) == classical_average_oracle(2, N, K)
    assert operator_eval_center(CenterPoly.monomial((1, 2), "C"), N, K) == C2 * C1


@pytest.mark.parametrize("N", [2, 3])
def test_three_cycles(N):
    # the two 3-cycles separate at the classical level in the same way as the q -> 1 limits
    # of omega_3(g2 g1) = C3 and omega_3(g1 g2) = C3 + C1^2 - N C2
    K = 2
    C1, C2, C3 = (casimir_operator(k, N, K) for k in (1, 2, 3))
    a, b = gl_tensor_oracle((2, 3, 1), 3, N, K), gl_tensor_oracle((3, 1, 2), 3, N, K)
    t1, t2 = C3, C3 + C1 * C1 - C2 * N
    assert (a == t1 and b == t2) or (a == t2 and b == t1)


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_wimm(m, N):
    for K in (1, 2):
        direct, tri = wimm_classical(m, N, K)
        assert direct == tri
    if m == 1:
        assert direct == casimir_operator(1, N, 2)


def test_scale_limit(monkeypatch):
    monkeypatch.setenv("QWEIGHT_SCALE_CAP", "16")
    with pytest.raises(ScaleLimit, match="exceeds"):
        rho(HeckeElt.one(3), 3, 3)
    with pytest.raises(ScaleLimit):
        gl_tensor_oracle((1, 2, 3), 3, 2, 2)
