"""Dense linear algebra over prime fields F_q.

Matrices are immutable numpy arrays of residues in ``[0, q)``.  Elimination
is exact: pivots are the first nonzero entry in column order and are
normalized with a modular inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .ring import is_prime


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")

    def inverse(self, a: int) -> int:
        return pow(int(a) % self.q, -1, self.q)


class MatrixGF:
    """Immutable ``rows x cols`` matrix over F_q."""

    __slots__ = ("field", "entries")

    def __init__(self, field: PrimeField | int, entries):
        if isinstance(field, int):
            field = PrimeField(field)
        arr = np.asarray(entries)
        if arr.dtype.kind not in "iu":
            arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        # residues are stored as uint8 when they fit, to keep incidence matrices small
        storage = np.uint8 if field.q < 256 else np.int64
        if arr.dtype == np.uint8:
            arr = arr % np.uint8(field.q) if field.q < 256 else arr.astype(np.int64)
        else:
            arr = (arr.astype(np.int64) % field.q).astype(storage)
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGF is immutable")

    @classmethod
    def zeros(cls, q: int, rows: int, cols: int) -> MatrixGF:
        return cls(q, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, q: int, k: int) -> MatrixGF:
        return cls(q, np.eye(k, dtype=np.int64))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.field, self.entries.T)

    @property
    def T(self) -> MatrixGF:
        return self.transpose()

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        if other.q != self.q:
            raise ValueError("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.cols * (self.q - 1) ** 2 < 2**62:
            a = self.entries.astype(np.int64)
            b = other.entries.astype(np.int64)
            return MatrixGF(self.field, a @ b % self.q)
        # int64 could overflow; fall back to Python integers
        prod = self.entries.astype(object) @ other.entries.astype(object)
        return MatrixGF(self.field, np.array(prod % self.q, dtype=np.int64))

    def is_zero(self) -> bool:
        return not self.entries.any()

    def row(self, i: int) -> np.ndarray:
        return self.entries[i].astype(np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (
            self.q == other.q
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.q, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF(q={self.q}, rows={self.rows}, cols={self.cols})"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def _echelon(m: MatrixGF) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form as a raw array plus pivot columns."""
    q = m.q
    a = m.entries.astype(np.int64)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r, c:] = a[r, c:] * pow(lead, -1, q) % q
        # rows at or below r are zero left of c, so only columns >= c change
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others, c:] = (a[others, c:] - np.outer(a[others, c], a[r, c:])) % q
        pivots.append(c)
        r += 1
    return a, pivots


def _rank_gf2_packed(m: MatrixGF) -> int:
    """Rank over F_2 with each row packed into a Python int."""
    bits = np.packbits(m.entries.astype(np.uint8, copy=False), axis=1)
    packed = [int.from_bytes(row.tobytes(), "big") for row in bits]
    rank = 0
    basis: dict[int, int] = {}  # leading bit -> row
    for v in packed:
        while v:
            lead = v.bit_length() - 1
            if lead in basis:
                v ^= basis[lead]
            else:
                basis[lead] = v
                rank += 1
                break
    return rank


def rank(m: MatrixGF) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.q == 2:
        return _rank_gf2_packed(m)
    return len(_echelon(m)[1])


def rref(m: MatrixGF) -> MatrixGF:
    """Reduced row echelon form, same shape as ``m`` (zero rows kept at the bottom)."""
    a, _ = _echelon(m)
    return MatrixGF(m.field, a)


def rref_with_pivots(m: MatrixGF) -> tuple[MatrixGF, list[int]]:
    a, pivots = _echelon(m)
    return MatrixGF(m.field, a), pivots


def row_basis(m: MatrixGF) -> MatrixGF:
    """Nonzero rows of the reduced row echelon form."""
    a, pivots = _echelon(m)
    return MatrixGF(m.field, a[: len(pivots)].reshape(len(pivots), m.cols))


def nullspace_basis(m: MatrixGF) -> MatrixGF:
    """Rows spanning ``{v : m @ v^T = 0}``; there are ``cols - rank`` of them."""
    q = m.q
    a, pivots = _echelon(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), m.cols), dtype=np.int64)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, pivots] = (-a[: len(pivots)][:, free]).T % q
    return MatrixGF(m.field, basis)


def nullity(m: MatrixGF) -> int:
    return m.cols - rank(m)


def format_matrix(m: MatrixGF) -> str:
    lines = [f"q {m.q} rows {m.rows} cols {m.cols}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in m.entries)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> MatrixGF:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "q" or head[2] != "rows" or head[4] != "cols":
        raise ValueError(f"bad matrix header: {lines[0]!r}")
    q, r, c = int(head[1]), int(head[3]), int(head[5])
    body = [[int(x) for x in ln.split()] for ln in lines[1:]]
    if len(body) != r or any(len(row) != c for row in body):
        raise ValueError(f"matrix body does not match header {r}x{c}")
    return MatrixGF(q, np.array(body, dtype=np.int64).reshape(r, c))


def matrix(q: int, rows: Sequence[Iterable[int]]) -> MatrixGF:
    """Convenience constructor from nested sequences."""
    data = [list(r) for r in rows]
    if not data:
        return MatrixGF(q, np.zeros((0, 0), dtype=np.int64))
    return MatrixGF(q, np.array(data, dtype=np.int64))
