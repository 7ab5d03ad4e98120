"""Minimum distance of a linear code and of its dual, within explicit budgets."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode
from .gf import MatrixGF, nullspace_basis
from .graph import UnitGraph

DEFAULT_ENUMERATION_BUDGET = 2**26
DEFAULT_PARTIAL_BUDGET = 2**20
DEFAULT_MAX_DUAL_WEIGHT = 6
DEFAULT_SEARCH_BUDGET = 5_000_000

_TABLE_ELEMENTS = 1 << 22


class Kind(str, enum.Enum):
    EXACT = "EXACT"
    LOWER_BOUND = "LOWER_BOUND"
    UPPER_BOUND = "UPPER_BOUND"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

    def __str__(self) -> str:
        return self.value


class Method(str, enum.Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    PARTIAL_ENUMERATION = "PARTIAL_ENUMERATION"
    COLUMN_DEPENDENCY = "COLUMN_DEPENDENCY"
    WITNESS_ONLY = "WITNESS_ONLY"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance computation.

    ``EXACT`` carries a witness of weight ``value``.  ``LOWER_BOUND(w)`` means
    no nonzero codeword of weight below ``w`` exists; a witness, if present,
    is the lightest codeword seen.  ``UPPER_BOUND`` only exhibits a codeword.
    """

    kind: Kind
    value: int | None
    method: Method
    witness: tuple[int, ...] | None = None

    @property
    def exact(self) -> bool:
        return self.kind is Kind.EXACT

    @property
    def lower(self) -> int | None:
        return self.value if self.kind in (Kind.EXACT, Kind.LOWER_BOUND) else None

    @property
    def upper(self) -> int | None:
        if self.kind in (Kind.EXACT, Kind.UPPER_BOUND):
            return self.value
        if self.witness is not None:
            return weight(self.witness)
        return None

    def sparse_witness(self) -> list[list[int]] | None:
        if self.witness is None:
            return None
        return [[i, x] for i, x in enumerate(self.witness) if x]


def weight(word) -> int:
    return int(np.count_nonzero(np.asarray(word)))


def _encode(message: np.ndarray, generator: np.ndarray, q: int) -> tuple[int, ...]:
    return tuple(int(x) for x in message @ generator % q)


# -- exhaustive enumeration ---------------------------------------------------


def _exhaustive_binary(gen: np.ndarray) -> tuple[int, np.ndarray]:
    k, length = gen.shape
    packed = np.packbits(gen.astype(np.uint8), axis=1)
    pad = (-packed.shape[1]) % 8
    packed = np.pad(packed, ((0, 0), (0, pad)))
    rows = packed.view(np.uint64)  # (k, words)

    low = min(k, 16)
    table = np.zeros((1 << low, rows.shape[1]), dtype=np.uint64)
    for i in range(low):
        table[1 << i : 2 << i] = table[: 1 << i] ^ rows[i]

    best, best_msg = math.inf, None
    high = np.zeros(rows.shape[1], dtype=np.uint64)
    gray = 0
    for step in range(1 << (k - low)):
        if step:
            bit = (step & -step).bit_length() - 1  # Gray code: flip the lowest set bit of step
            high ^= rows[low + bit]
            gray ^= 1 << bit
        w = np.bitwise_count(table ^ high).sum(axis=1, dtype=np.int64)
        if step == 0:
            w[0] = length + 1  # the zero codeword
        i = int(w.argmin())
        if w[i] < best:
            best = int(w[i])
            best_msg = i | (gray << low)
    msg = np.array([(best_msg >> j) & 1 for j in range(k)], dtype=np.int64)
    return best, msg


def _exhaustive_qary(gen: np.ndarray, q: int) -> tuple[int, np.ndarray]:
    k, length = gen.shape
    low = 0
    while low < k and q ** (low + 1) * length <= _TABLE_ELEMENTS:
        low += 1
    dtype = np.int16 if (q - 1) ** 2 + q < 2**15 else np.int64
    table = np.zeros((1, length), dtype=dtype)
    for i in range(low):
        row = gen[i].astype(dtype)
        table = np.concatenate([(table + c * row) % q for c in range(q)])
    high_rows = gen[low:]

    best, best_msg = math.inf, None
    for digits in itertools.product(range(q), repeat=k - low):
        h = np.asarray(digits, dtype=np.int64)
        shift = (h @ high_rows % q).astype(dtype) if k > low else np.zeros(length, dtype=dtype)
        w = np.count_nonzero((table + shift) % q, axis=1)
        if not h.any():
            w[0] = length + 1
        i = int(w.argmin())
        if w[i] < best:
            best = int(w[i])
            lo = [(i // q**j) % q for j in range(low)]
            best_msg = np.array(lo + list(digits), dtype=np.int64)
    return best, best_msg


def min_distance_exhaustive(c: LinearCode, budget: int = DEFAULT_ENUMERATION_BUDGET) -> DistanceResult:
    """Exact minimum weight over all ``q^k - 1`` nonzero codewords."""
    k, q = c.dimension, c.q
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    if q**k > budget:
        return DistanceResult(Kind.BUDGET_EXCEEDED, None, Method.EXHAUSTIVE)
    gen = c.generator.entries.astype(np.int64)
    if q == 2:
        best, msg = _exhaustive_binary(gen)
    else:
        best, msg = _exhaustive_qary(gen, q)
    witness = _encode(msg, gen, q)
    return DistanceResult(Kind.EXACT, best, Method.EXHAUSTIVE, witness)


# -- partial enumeration ------------------------------------------------------


def _messages_up_to(k: int, q: int, t: int) -> int:
    """Number of messages of weight 1..t with leading coefficient 1."""
    return sum(math.comb(k, i) * (q - 1) ** (i - 1) for i in range(1, t + 1))


def partial_depth(k: int, q: int, budget: int) -> int:
    t = 0
    while t < k and _messages_up_to(k, q, t + 1) <= budget:
        t += 1
    return t


def min_distance_partial(c: LinearCode, budget: int = DEFAULT_PARTIAL_BUDGET) -> DistanceResult:
    """Lower bound from all messages of weight at most ``t``.

    The generator is systematic on its pivot columns, so a message of weight
    ``i`` yields a codeword of weight at least ``i``.  Enumerating every
    message of weight <= t therefore shows ``d >= min(best, t + 1)``, and the
    bound is exact once ``best <= t + 1``.
    """
    k, q = c.dimension, c.q
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    t = partial_depth(k, q, budget)
    if t == 0:
        return DistanceResult(Kind.BUDGET_EXCEEDED, None, Method.PARTIAL_ENUMERATION)
    gen = c.generator.entries.astype(np.int64)
    best, best_msg = _search_light_messages(gen, q, t)
    witness = _encode(best_msg, gen, q)
    if best <= t + 1:
        return DistanceResult(Kind.EXACT, best, Method.PARTIAL_ENUMERATION, witness)
    return DistanceResult(Kind.LOWER_BOUND, t + 1, Method.PARTIAL_ENUMERATION, witness)


def _search_light_messages(gen: np.ndarray, q: int, t: int) -> tuple[int, np.ndarray]:
    k = gen.shape[0]
    best = math.inf
    best_support: tuple = ()
    if q == 2:
        packed = [int("".join(map(str, row)), 2) for row in gen.tolist()]
        stack = [(0, 0, ())]
        while stack:
            start, acc, support = stack.pop()
            for i in range(start, k):
                v = acc ^ packed[i]
                w = v.bit_count()
                sup = support + ((i, 1),)
                if w < best:
                    best, best_support = w, sup
                if len(sup) < t:
                    stack.append((i + 1, v, sup))
    else:
        zero = np.zeros(gen.shape[1], dtype=np.int64)
        stack = [(0, zero, ())]
        while stack:
            start, acc, support = stack.pop()
            coeffs = (1,) if not support else range(1, q)
            for i in range(start, k):
                for a in coeffs:
                    v = (acc + a * gen[i]) % q
                    w = int(np.count_nonzero(v))
                    sup = support + ((i, a),)
                    if w < best:
                        best, best_support = w, sup
                    if len(sup) < t:
                        stack.append((i + 1, v, sup))
    msg = np.zeros(k, dtype=np.int64)
    for i, a in best_support:
        msg[i] = a
    return int(best), msg


# -- dual distance by column dependencies --------------------------------------


class _OutOfBudget(Exception):
    pass


class _DependencySearch:
    """Smallest set of linearly dependent columns of a (sparse) matrix.

    A dependent set with all coefficients nonzero covers each of its rows at
    least twice, so the search only grows sets through rows covered once.
    Sets are grown from their smallest column index to avoid repeats.
    """

    def __init__(self, m: MatrixGF, node_budget: int):
        self.m = m
        self.entries = m.entries
        self.node_budget = node_budget
        self.nodes = 0
        ncols = m.cols
        nz_cols, nz_rows = np.nonzero(m.entries.T)
        split = np.searchsorted(nz_cols, np.arange(1, ncols))
        self.supports = [tuple(part) for part in np.split(nz_rows, split)]
        self.supports = [tuple(int(r) for r in sup) for sup in self.supports]
        self.row_cols: list[list[int]] = [[] for _ in range(m.rows)]
        for j, sup in enumerate(self.supports):
            for r in sup:
                self.row_cols[r].append(j)
        self.max_weight = max((len(s) for s in self.supports), default=0)
        self.pair_index: dict[tuple[int, int], list[int]] | None = None
        if self.max_weight <= 4:
            self.pair_index = {}
            for j, sup in enumerate(self.supports):
                for pair in itertools.combinations(sup, 2):
                    self.pair_index.setdefault(pair, []).append(j)
        self.tested: set[frozenset[int]] = set()

    def run(self, max_size: int) -> tuple[int, tuple[int, ...]] | int:
        """Return ``(size, witness)`` or, when none is found, the first size not ruled out."""
        for j, sup in enumerate(self.supports):
            if not sup:
                w = [0] * self.m.cols
                w[j] = 1
                return 1, tuple(w)
        for size in range(2, max_size + 1):
            try:
                found = self._search_size(size)
            except _OutOfBudget:
                return size
            if found is not None:
                return size, found
        return max_size + 1

    def _search_size(self, size: int) -> tuple[int, ...] | None:
        self.tested.clear()
        for e0 in range(self.m.cols):
            cover: dict[int, int] = {}
            for r in self.supports[e0]:
                cover[r] = 1
            found = self._extend([e0], cover, size)
            if found is not None:
                return found
        return None

    def _extend(self, chosen: list[int], cover: dict[int, int], size: int):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _OutOfBudget
        rem = size - len(chosen)
        deficient = [r for r, c in cover.items() if c == 1]
        if rem == 0:
            return None if deficient else self._test(chosen, cover)
        if len(deficient) > rem * self.max_weight:
            return None
        e0 = chosen[0]
        if rem == 2 and deficient:
            return self._close_pair(chosen, cover, deficient, size)
        if rem == 1:
            candidates = self._closing_candidates(deficient, cover)
        elif deficient:
            candidates = self.row_cols[min(deficient)]
        else:
            candidates = sorted({j for r in cover for j in self.row_cols[r]})
        for j in candidates:
            if j <= e0 or j in chosen:
                continue
            sup = self.supports[j]
            chosen.append(j)
            for r in sup:
                cover[r] = cover.get(r, 0) + 1
            found = self._extend(chosen, cover, size)
            for r in sup:
                cover[r] -= 1
                if not cover[r]:
                    del cover[r]
            chosen.pop()
            if found is not None:
                return found
        return None

    def _close_pair(self, chosen: list[int], cover: dict[int, int], deficient: list[int], size: int):
        """The last two columns, as a flat loop instead of two recursion levels."""
        e0 = chosen[0]
        for j in self.row_cols[min(deficient)]:
            if j <= e0 or j in chosen:
                continue
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise _OutOfBudget
            sup = self.supports[j]
            need = [r for r in deficient if r not in sup] + [r for r in sup if r not in cover]
            if len(need) > self.max_weight:
                continue
            if not need:
                # j alone fixes every row; fall back to the general step
                chosen.append(j)
                for r in sup:
                    cover[r] = cover.get(r, 0) + 1
                found = self._extend(chosen, cover, size)
                for r in sup:
                    cover[r] -= 1
                    if not cover[r]:
                        del cover[r]
                chosen.pop()
                if found is not None:
                    return found
                continue
            need.sort()
            if len(need) >= 2 and self.pair_index is not None:
                pool = self.pair_index.get((need[0], need[1]), ())
            else:
                pool = self.row_cols[need[0]]
            for k in pool:
                if k <= e0 or k == j or k in chosen:
                    continue
                supk = self.supports[k]
                if all(r in supk for r in need) and all(r in cover or r in sup for r in supk):
                    final = dict(cover)
                    for r in sup + supk:
                        final[r] = final.get(r, 0) + 1
                    found = self._test(chosen + [j, k], final)
                    if found is not None:
                        return found
        return None

    def _closing_candidates(self, deficient: list[int], cover: dict[int, int]) -> list[int]:
        # the last column must hit every deficient row and add no new row
        if not deficient:
            pool = sorted({j for r in cover for j in self.row_cols[r]})
        elif len(deficient) >= 2 and self.pair_index is not None:
            a, b = sorted(deficient)[:2]
            pool = self.pair_index.get((a, b), [])
        else:
            pool = self.row_cols[deficient[0]]
        need = set(deficient)
        return [j for j in pool if need.issubset(self.supports[j]) and all(r in cover for r in self.supports[j])]

    def _test(self, chosen: list[int], cover: dict[int, int]) -> tuple[int, ...] | None:
        key = frozenset(chosen)
        if key in self.tested:
            return None
        self.tested.add(key)
        rows = sorted(cover)
        cols = sorted(chosen)
        sub = MatrixGF(self.m.field, self.entries[np.ix_(rows, cols)])
        null = nullspace_basis(sub)
        if null.rows == 0:
            return None
        coeffs = null.row(0)
        witness = [0] * self.m.cols
        for j, a in zip(cols, coeffs):
            witness[j] = int(a)
        return tuple(witness)


def dual_min_distance_by_dependency(
    c: LinearCode,
    max_weight: int = DEFAULT_MAX_DUAL_WEIGHT,
    node_budget: int = DEFAULT_SEARCH_BUDGET,
) -> DistanceResult:
    """Minimum distance of the dual code: the fewest dependent generator columns.

    The search runs on the code's spanning matrix, whose column dependencies
    are those of the generator; for incidence codes it is sparse.  Returns
    ``LOWER_BOUND(w)`` when every size below ``w`` was ruled out but nothing
    was found up to ``max_weight`` or the node budget ran out.
    """
    search = _DependencySearch(c.spanning, node_budget)
    out = search.run(max_weight)
    if isinstance(out, tuple):
        size, witness = out
        return DistanceResult(Kind.EXACT, size, Method.COLUMN_DEPENDENCY, witness)
    return DistanceResult(Kind.LOWER_BOUND, out, Method.COLUMN_DEPENDENCY)


# -- witness bound ------------------------------------------------------------


def distance_witness_bound(c: LinearCode, g: UnitGraph) -> DistanceResult:
    """``d <= min degree``: the incidence row of a minimum-degree vertex is a codeword."""
    v = int(np.argmin(g.degrees))
    row = c.spanning.row(v)
    return DistanceResult(Kind.UPPER_BOUND, weight(row), Method.WITNESS_ONLY, tuple(int(x) for x in row))
