"""
Verification suites: each suite is a list of exact identity checks.

A check passes when the symbolic difference of its two sides vanishes (or, for
the negative control, when it does not). Failed checks carry the rendered
difference, so a report explains itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional

from .centerpoly import CenterPoly
from .coeff import LAMBDA, QRat, eval_q1, qdim, qint
from .hecke import HeckeElt, all_perms, qtrace
from .qbern import (
    classical_bernoulli,
    compositions,
    multinomial,
    qbernoulli,
    qbernoulli_via_phi,
)
from .render import render_sympoly
from .rmat import (
    TensorOp,
    classical_average_oracle,
    dj_rmatrix,
    matrix_symmetrizers,
    operator_eval_center,
    partial_trace,
    perm_op,
    r_matrix_at,
    r_trace_partial,
    rho,
    wimm_classical,
)
from .series import Series
from .symf import SymPoly, hc_image, one_part_schur
from .wsys import (
    avg_formula_classical,
    avg_formula_quantum,
    limit_q1_sym,
    omega,
    omega_average_char,
    omega_average_closed,
    omega_average_direct,
    omega_via_chi,
    qimm_hc,
    qimm_via_ws,
    wimm_hc,
    wimm_via_ws,
)

__all__ = ["Check", "Report", "SUITES", "run_suite", "worked_examples", "four_term_sides"]


@dataclass
class Check:
    name: str
    status: str
    difference: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    suite: str
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "suite": self.suite,
            "checks": [{"name": c.name, "status": c.status, "difference": c.difference} for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"[{c.status}] {c.name}"
            if c.difference is not None:
                line += f"\n    difference: {c.difference}"
            lines.append(line)
        lines.append(f"{self.suite}: {self.passed}/{len(self.checks)} pass")
        return "\n".join(lines)


def _render(x) -> str:
    if isinstance(x, SymPoly):
        return render_sympoly(x, expand=True)
    if isinstance(x, TensorOp):
        nz = [(r, c, v) for r, row in sorted(x.rows.items()) for c, v in sorted(row.items())]
        head = ", ".join(f"({r},{c}): {v}" for r, c, v in nz[:3])
        return f"{len(nz)} nonzero entries; {head}" + (" ..." if len(nz) > 3 else "")
    return str(x)


def _is_zero(x) -> bool:
    if isinstance(x, TensorOp):
        return not x.rows
    return not x


def _eq(name, lhs, rhs) -> Check:
    d = lhs - rhs
    if _is_zero(d):
        return Check(name, "pass")
    return Check(name, "fail", _render(d))


def _neq(name, lhs, rhs) -> Check:
    d = lhs - rhs
    if _is_zero(d):
        return Check(name, "fail", "0")
    return Check(name, "pass", None)


# ---------------------------------------------------------------------------
# worked values in universal mode

def _C(*idx):
    return CenterPoly.monomial(idx, "C", QRat(1))


def worked_examples():
    """[(label, word, m, published value)] for the eight worked values of omega."""
    d = qdim(None)
    lam = LAMBDA
    C1, C2, C3, C4 = _C(1), _C(2), _C(3), _C(4)
    return [
        ("omega_3(g2 g1)", (2, 1), 3, C3),
        ("omega_3(g1 g2)", (1, 2), 3, C3 + C1 * C1 - C2 * d),
        ("omega_3(g1 g2 g1)", (1, 2, 1), 3, C1 * C2 + C3 * lam),
        ("omega_4(g1 g3 g2)", (1, 3, 2), 4, C4 + C1 * C2 - C3 * d),
        (
            "omega_4(g2 g1 g3 g2)",
            (2, 1, 3, 2),
            4,
            C2 * C2 + (C4 + C2 * C1) * lam + C1 * C1 - C2 * d - C1 * C2,
        ),
        ("omega_4(g1 g3 g2 g1)", (1, 3, 2, 1), 4, C3 * C1 + C4 * lam),
        (
            "omega_4(g2 g1 g3 g2 g1)",
            (2, 1, 3, 2, 1),
            4,
            C4 + C1 * C2 - C3 * d + C3 * C1 * lam + C4 * lam ** 2,
        ),
        (
            "omega_4(g1 g2 g1 g3 g2 g1)",
            (1, 2, 1, 3, 2, 1),
            4,
            C2 * C2 + (C4 * 2 + C1 * C2 - C3 * d) * lam + C3 * C1 * lam ** 2 + C4 * lam ** 3,
        ),
    ]


def four_term_sides(N=None):
    """(omega(g1g3) - omega(g2g1g3g2), omega(g1g2g1g3g2g1) - omega(g2g1g3g2))."""
    w = lambda word: omega(HeckeElt.word(word, 4), N)
    mid = w((2, 1, 3, 2))
    return w((1, 3)) - mid, w((1, 2, 1, 3, 2, 1)) - mid


# ---------------------------------------------------------------------------
# suites

def suite_examples(**_):
    out = []
    for label, word, m, expected in worked_examples():
        out.append(_eq(label, omega(HeckeElt.word(word, m)), expected))
    return out


def suite_paths(m_max=4, N_max=3, **_):
    out = []
    for N in range(2, N_max + 1):
        for m in range(3, m_max + 1):
            for s in all_perms(m):
                x = HeckeElt.basis(s)
                out.append(_eq(f"omega = omega_via_chi on T{list(s)}, N={N}", omega(x, N), omega_via_chi(x, N)))
    return out


def suite_average(m_max=4, N_max=4, **_):
    out = []
    for N in range(1, N_max + 1):
        for m in range(1, m_max + 1):
            direct = hc_image(omega_average_direct(m, N), N)
            char = omega_average_char(m, N)
            out.append(_eq(f"Omega_{m}({N}): direct = char", direct, char))
            out.append(_eq(f"Omega_{m}({N}): char = closed xi-form", char, omega_average_closed(m, N)))
            out.append(_eq(f"Omega_{m}({N}): char = Bernoulli formula", char, avg_formula_quantum(m, N)))
    return out


def suite_limit(m_max=4, N_max=4, K_max=2, **_):
    out = []
    for N in range(1, N_max + 1):
        for m in range(1, m_max + 1):
            lim = limit_q1_sym(hc_image(omega_average_direct(m, N), N))
            out.append(_eq(f"lim Omega_{m}({N}) = classical formula", lim, avg_formula_classical(m, N)))
            out.append(
                _eq(
                    f"lim Bernoulli formula = classical formula, m={m}, N={N}",
                    limit_q1_sym(avg_formula_quantum(m, N)),
                    avg_formula_classical(m, N),
                )
            )
    for N in range(1, min(N_max, 3) + 1):
        for m in range(1, min(m_max, 3) + 1):
            formula = avg_formula_classical(m, N).to_h()
            for K in range(1, K_max + 1):
                out.append(
                    _eq(
                        f"W_{m}({N}) operator = tensor average, K={K}",
                        operator_eval_center(formula, N, K),
                        classical_average_oracle(m, N, K),
                    )
                )
    return out


def _sinh_ratio_power(nu, order):
    # ((e^{t/2} - e^{-t/2})/t)^{-nu} = (sum_j t^{2j} / (4^j (2j+1)!))^{-nu}
    g = [Fraction(0)] * (order + 1)
    for j in range(0, order // 2 + 1):
        g[2 * j] = Fraction(1, 4 ** j * factorial(2 * j + 1))
    return Series(g, order) ** (-nu)


def genfun_sides(N: int, order: int = 5):
    nu = N - 1
    one = SymPoly.const(Fraction(1), N)
    W = [one] + [limit_q1_sym(omega_average_char(m, N)) for m in range(1, order + 1)]
    S = [one] + [one_part_schur(k, N) for k in range(1, order + 1)]
    lhs = Series([W[m] * Fraction(1, factorial(m + nu)) for m in range(order + 1)], order)
    rhs = Series([S[k] * Fraction(1, factorial(k + nu)) for k in range(order + 1)], order)
    rhs = _sinh_ratio_power(nu, order) * rhs
    return lhs, rhs


def suite_genfun(N_max=3, order=5, **_):
    out = []
    for N in range(2, max(N_max, 2) + 1):
        lhs, rhs = genfun_sides(N, order)
        for k in range(order + 1):
            out.append(_eq(f"generating function, N={N}, t^{k}", lhs[k], rhs[k]))
    return out


def suite_hatted(m_max=3, N_max=3, K_max=2, **_):
    out = []
    for N in range(1, N_max + 1):
        for m in range(1, m_max + 1):
            hc = qimm_hc(m, N)
            out.append(_eq(f"Omega-hat_{m}({N}): triangular = multi-sum", qimm_via_ws(m, N), hc))
            out.append(_eq(f"W-hat_{m}({N}): triangular = multi-sum", wimm_via_ws(m, N), wimm_hc(m, N)))
            out.append(_eq(f"lim Omega-hat_{m}({N}) = W-hat_{m}({N})", limit_q1_sym(hc), wimm_hc(m, N)))
            for K in range(1, K_max + 1):
                direct, tri = wimm_classical(m, N, K)
                out.append(_eq(f"W-hat_{m}({N}) operators, K={K}", direct, tri))
    return out


def suite_rmatrix(m_max=4, N_max=3, **_):
    out = []
    for N in range(1, N_max + 1):
        R = dj_rmatrix(N)
        out.append(_eq(f"Hecke relation for R, N={N}", R * R, TensorOp.identity(N, 2) + R * LAMBDA))
        out.append(_eq(f"<I>_(1,1) = q^-1[N], N={N}", r_trace_partial(TensorOp.identity(N, 1), 1, 1),
                       TensorOp.identity(N, 0, qdim(N))))
        out.append(_eq(f"<R>_(2,2) = I, N={N}", r_trace_partial(R, 2, 2), TensorOp.identity(N, 1)))
        a, b = r_matrix_at(1, 3, N), r_matrix_at(2, 3, N)
        out.append(_eq(f"braid relation for R, N={N}", a * b * a, b * a * b))
        nu = N - 1
        for m in range(2, m_max + 1):
            S, H = matrix_symmetrizers(m, N)
            Sp, Hp = matrix_symmetrizers(m - 1, N)
            out.append(_eq(f"H^({m}) idempotent, N={N}", H * H, H))
            out.append(_eq(f"S^({m}) idempotent, N={N}", S * S, S))
            for i in range(1, m):
                Ri = r_matrix_at(i, m, N)
                Pi = perm_op(tuple(i + 1 if j == i else i if j == i + 1 else j for j in range(1, m + 1)), N)
                out.append(_eq(f"H^({m}) commutes with R_{i}, N={N}", H * Ri, Ri * H))
                out.append(_eq(f"S^({m}) commutes with P_{i}, N={N}", S * Pi, Pi * S))
            out.append(_eq(f"<H^({m})>_(m,m), N={N}", r_trace_partial(H, m, m),
                           Hp * (QRat.q(-1) * qint(nu + m) / qint(m))))
            out.append(_eq(f"Tr_(m,m) S^({m}), N={N}", partial_trace(S, m, m), Sp * Fraction(nu + m, m)))
    for N in range(2, N_max + 1):
        for m in range(3, m_max + 1):
            for s in all_perms(m):
                x = HeckeElt.basis(s)
                out.append(_eq(f"R-trace of rho(T{list(s)}) = rho(Tr T{list(s)}), N={N}",
                               r_trace_partial(rho(x, m, N), m, m), rho(qtrace(x, N), m - 1, N)))
    return out


def _xi_values():
    return [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)]


def _bracket(xi):
    from .qbern import zxi

    return (1 - zxi(xi)) / (1 - QRat.q(-2))


def suite_bernoulli(**_):
    out = []
    for xi in _xi_values():
        for h in range(1, 5):
            for k in range(1, min(h, 3) + 1):
                for m in range(6):
                    out.append(_eq(f"beta_{m}^({h},{k})({xi}): sum = Phi", qbernoulli(m, h, k, xi),
                                   qbernoulli_via_phi(m, h, k, xi)))
    for xi in _xi_values()[:3]:
        br = _bracket(xi)
        for h in range(1, 5):
            for k in range(1, 4):
                if k > h:
                    continue
                for m in range(7):
                    rhs = sum((qbernoulli(m - i, h + i, k, 0) * br ** i * comb(m, i) for i in range(m + 1)), QRat())
                    out.append(_eq(f"polynomial -> number, beta_{m}^({h},{k})({xi})", qbernoulli(m, h, k, xi), rhs))
                    crhs = sum(classical_bernoulli(m - i, k, 0) * Fraction(xi) ** i * comb(m, i) for i in range(m + 1))
                    out.append(_eq(f"classical polynomial -> number, B_{m}^({k})({xi})",
                                   classical_bernoulli(m, k, xi), crhs))
    for k in range(1, 4):
        for h in range(k, k + 2):
            for m in range(6):
                rhs = QRat()
                crhs = Fraction(0)
                for parts in compositions(m, k):
                    term = QRat(multinomial(parts))
                    cterm = Fraction(multinomial(parts))
                    acc = 0
                    for j, i in enumerate(parts, 1):
                        term = term * qbernoulli(i, h - j + 1 + acc, 1, 0)
                        cterm *= classical_bernoulli(i, 1, 0)
                        acc += i
                    rhs = rhs + term
                    crhs += cterm
                out.append(_eq(f"k -> 1, beta_{m}^({h},{k})", qbernoulli(m, h, k, 0), rhs))
                out.append(_eq(f"classical k -> 1, B_{m}^({k})", classical_bernoulli(m, k, 0), crhs))
    for h in range(1, 5):
        for m in range(8):
            rhs = qbernoulli(m, h, 1, 0) - (1 - QRat.q(-2)) * qbernoulli(m + 1, h, 1, 0)
            out.append(_eq(f"h -> 1, beta_{m}^({h + 1},1)", qbernoulli(m, h + 1, 1, 0), rhs))
    for xi in _xi_values()[:3]:
        for h in range(1, 5):
            for k in range(1, min(h, 3) + 1):
                for m in range(6):
                    out.append(_eq(f"lim beta_{m}^({h},{k})({xi}) = B_{m}^({k})({xi})",
                                   eval_q1(qbernoulli(m, h, k, xi)), classical_bernoulli(m, k, xi)))
    for nu in range(1, 5):
        for j in range(4):
            out.append(_eq(f"B_{2 * j + 1}^({nu})({nu}/2) = 0",
                           classical_bernoulli(2 * j + 1, nu, Fraction(nu, 2)), Fraction(0)))
    return out


def suite_negative(**_):
    lhs, rhs = four_term_sides()
    return [_neq("four-term relation fails for omega_4 (universal)", lhs, rhs)]


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "examples": suite_examples,
    "paths": suite_paths,
    "average": suite_average,
    "limit": suite_limit,
    "genfun": suite_genfun,
    "hatted": suite_hatted,
    "rmatrix": suite_rmatrix,
    "bernoulli": suite_bernoulli,
    "negative": suite_negative,
}


def run_suite(name: str, **bounds) -> Report:
    """Run one suite (or ``all``); bounds with value None fall back to the suite defaults."""
    bounds = {k: v for k, v in bounds.items() if v is not None}
    if name == "all":
        report = Report("all")
        for sub in SUITES:
            for c in SUITES[sub](**bounds):
                report.checks.append(Check(f"{sub}: {c.name}", c.status, c.difference))
        return report
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return Report(name, SUITES[name](**bounds))
