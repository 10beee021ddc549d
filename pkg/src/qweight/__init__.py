"""
Exact computation of the quantum gl(N)-weight system on Hecke algebras of
type A, its classical limit, and closed forms for its average values.
"""

from __future__ import annotations

from .centerpoly import CenterPoly
from .coeff import LAMBDA, PoleAtOne, Q, QRat, UCoeff, eval_q1, qdim, qfactorial, qfalling, qint
from .hecke import HeckeElt, qsymmetrizer, qtrace
from .qbern import QBernParams, classical_bernoulli, qbernoulli, qbernoulli_via_phi
from .rmat import ScaleLimit, TensorOp, dj_rmatrix, rho
from .symf import SymPoly, hc_image
from .wsys import (
    avg_formula_classical,
    avg_formula_quantum,
    chi,
    omega,
    omega_average_char,
    omega_average_direct,
    omega_via_chi,
    qimm_hc,
    qimm_via_ws,
)

__version__ = "0.1.0"

__all__ = [
    "CenterPoly", "LAMBDA", "PoleAtOne", "Q", "QRat", "UCoeff", "eval_q1", "qdim", "qfactorial",
    "qfalling", "qint", "HeckeElt", "qsymmetrizer", "qtrace", "QBernParams", "classical_bernoulli",
    "qbernoulli", "qbernoulli_via_phi", "ScaleLimit", "TensorOp", "dj_rmatrix", "rho", "SymPoly",
    "hc_image", "avg_formula_classical", "avg_formula_quantum", "chi", "omega", "omega_average_char",
    "omega_average_direct", "omega_via_chi", "qimm_hc", "qimm_via_ws",
]
