"""Unit graphs of Z_n, the linear codes spanned by their incidence matrices,
and a harness comparing closed-form predictions with computed invariants."""

from .codes import Basis, LinearCode, PredictedCodeParams, code_from_incidence, incidence_matrix, predict_code_params
from .distance import DistanceResult, Kind, Method
from .gf import MatrixGF, PrimeField, nullspace_basis, rank, rref, row_basis
from .graph import (
    ACYCLIC,
    INFINITE,
    GraphInvariants,
    PredictedInvariants,
    Shape,
    UnitGraph,
    build_unit_graph,
    invariants,
    predict,
)
from .ring import Factorization, classify, euler_phi, factorize
from .verify import Budgets, VerificationReport, sweep, verify_one

__version__ = "0.1.0"
