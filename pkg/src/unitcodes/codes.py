"""Linear codes spanned by the incidence matrix of a unit graph."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import MatrixGF, PrimeField, nullspace_basis, rank, row_basis
from .graph import GraphNotConnected, UnitGraph, is_connected
from .ring import Factorization, euler_phi, factorize


class LinearCode:
    """Row space of ``spanning`` over F_q.

    Generator and parity-check matrices are derived on first use, since the
    parity-check matrix of a large incidence code does not fit in memory.
    """

    def __init__(self, spanning: MatrixGF):
        self.spanning = spanning

    @property
    def field(self) -> PrimeField:
        return self.spanning.field

    @property
    def q(self) -> int:
        return self.spanning.q

    @property
    def length(self) -> int:
        return self.spanning.cols

    @cached_property
    def dimension(self) -> int:
        return rank(self.spanning)

    @property
    def dual_dimension(self) -> int:
        return self.length - self.dimension

    @cached_property
    def generator(self) -> MatrixGF:
        """``k x length`` in reduced row echelon form."""
        return row_basis(self.spanning)

    @cached_property
    def parity_check(self) -> MatrixGF:
        return nullspace_basis(self.spanning)

    def dual(self) -> LinearCode:
        return LinearCode(self.parity_check)

    def contains(self, word) -> bool:
        w = MatrixGF(self.field, np.asarray(word, dtype=np.int64).reshape(1, -1))
        return (w @ self.parity_check.T).is_zero()

    def __repr__(self) -> str:
        return f"LinearCode(q={self.q}, length={self.length})"


def incidence_matrix(g: UnitGraph, q: int = 2) -> MatrixGF:
    """``|V| x |E|`` with a 1 at both endpoints of each edge column."""
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    h = np.zeros((g.n, g.edge_count), dtype=np.uint8)
    cols = np.arange(g.edge_count)
    h[g.edge_array[:, 0], cols] = 1
    h[g.edge_array[:, 1], cols] = 1
    return MatrixGF(q, h)


def code_from_incidence(g: UnitGraph, q: int) -> LinearCode:
    if not is_connected(g):
        raise GraphNotConnected(f"G(Z_{g.n}) is not connected")
    return LinearCode(incidence_matrix(g, q))


class Basis(str, enum.Enum):
    THEOREM = "THEOREM"
    CONJECTURE = "CONJECTURE"
    NONE = "NONE"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PredictedCodeParams:
    length: int
    dimension: int | None
    min_distance: int | None
    dual_dimension: int | None
    dual_min_distance: int | None
    basis: Basis
    rule: str | None = None


def predict_code_params(f: Factorization | int, q: int) -> PredictedCodeParams:
    """Closed-form ``[length, k, d]_q`` of the incidence code and its dual.

    Odd n pairs with q = 2, even n with odd q; any other combination has no
    prediction.  With four or more distinct primes the values are conjectural.
    """
    if isinstance(f, int):
        f = factorize(f)
    n = f.n
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    phi = euler_phi(f)
    basis = Basis.THEOREM if f.num_primes <= 3 else Basis.CONJECTURE
    if f.two_is_unit and q == 2:
        length = (n - 1) * phi // 2
        dual_d = 3 if n != 3 and basis is Basis.THEOREM else None
        return PredictedCodeParams(
            length, n - 1, phi - 1, (n - 1) * (phi - 2) // 2, dual_d, basis, "binary, n odd"
        )
    if not f.two_is_unit and q != 2:
        length = n * phi // 2
        # n = 2 has a zero dual; n = 6 has girth 6 instead of 4
        dual_d = 4 if n not in (2, 6) and basis is Basis.THEOREM else None
        return PredictedCodeParams(
            length, n - 1, phi, (n * (phi - 2) + 2) // 2, dual_d, basis, "odd q, n even"
        )
    length = (n - 1) * phi // 2 if f.two_is_unit else n * phi // 2
    return PredictedCodeParams(length, None, None, None, None, Basis.NONE)
