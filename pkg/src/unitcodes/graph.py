"""Unit graphs G(Z_n) and their structural invariants.

Two distinct residues ``x, y`` are adjacent when ``x + y`` is a unit mod n.
Invariants are computed by search (breadth-first search, max-flow) and never
by the closed forms; those live in :func:`predict` for comparison.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .ring import Factorization, euler_phi, factorize


class Sentinel(str, enum.Enum):
    INFINITE = "INFINITE"
    ACYCLIC = "ACYCLIC"

    def __str__(self) -> str:
        return self.value


INFINITE = Sentinel.INFINITE
ACYCLIC = Sentinel.ACYCLIC


class GraphNotConnected(ValueError):
    pass


class UnitGraph:
    """The unit graph of Z_n with edges ``(u, v)``, ``u < v``, in lexicographic order."""

    def __init__(self, n: int, edge_array: np.ndarray):
        arr = np.asarray(edge_array, dtype=np.int64).reshape(-1, 2)
        arr.setflags(write=False)
        self.n = n
        self.edge_array = arr

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edge_array)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((int(u), int(v)) for u, v in self.edge_array)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        u, v = self.edge_array[:, 0], self.edge_array[:, 1]
        a[u, v] = True
        a[v, u] = True
        a.setflags(write=False)
        return a

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.edge_array.ravel(), minlength=self.n)
        deg.setflags(write=False)
        return deg

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min())

    def __eq__(self, other):
        if not isinstance(other, UnitGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edge_array, other.edge_array)

    def __repr__(self) -> str:
        return f"UnitGraph(n={self.n}, edges={self.edge_count})"


def build_unit_graph(n: int) -> UnitGraph:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    chunks = []
    for u in range(n - 1):
        v = np.arange(u + 1, n, dtype=np.int64)
        v = v[np.gcd((u + v) % n, n) == 1]
        if v.size:
            chunks.append(np.column_stack([np.full(v.size, u, dtype=np.int64), v]))
    edges = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
    return UnitGraph(n, edges)


def format_graph(g: UnitGraph) -> str:
    lines = [f"n {g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> UnitGraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split() if lines else []
    if len(head) != 3 or head[0] != "n":
        raise ValueError("bad graph header")
    n, m = int(head[1]), int(head[2])
    pairs = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise ValueError("graph body does not match header")
    return UnitGraph(n, np.array(pairs, dtype=np.int64).reshape(-1, 2))


# -- searches -----------------------------------------------------------------


def bfs_distances(g: UnitGraph, source: int) -> np.ndarray:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    adj = g.adjacency_matrix
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source])
    level = 0
    while frontier.size:
        level += 1
        reached = adj[frontier].any(axis=0) & (dist < 0)
        frontier = np.flatnonzero(reached)
        dist[frontier] = level
    return dist


def is_connected(g: UnitGraph) -> bool:
    return bool((bfs_distances(g, 0) >= 0).all())


def diameter(g: UnitGraph) -> int | Sentinel:
    """All sources searched at once, one boolean matrix product per level."""
    if not is_connected(g):
        return INFINITE
    adj = g.adjacency_matrix.astype(np.float32)
    reach = np.eye(g.n, dtype=bool)
    frontier = reach.copy()
    ecc = 0
    while True:
        nxt = ((frontier.astype(np.float32) @ adj) > 0) & ~reach
        if not nxt.any():
            return ecc
        ecc += 1
        reach |= nxt
        frontier = nxt


def girth(g: UnitGraph) -> int | Sentinel:
    """Shortest cycle length, by a breadth-first search from every vertex.

    A non-tree edge ``(u, v)`` seen from root ``r`` closes a walk of length
    ``level(u) + level(v) + 1`` that contains a cycle; the minimum over all
    roots is the girth.
    """
    adj = g.adjacency_matrix
    eu, ev = g.edge_array[:, 0], g.edge_array[:, 1]
    best = math.inf
    for root in range(g.n):
        dist = np.full(g.n, -1, dtype=np.int64)
        parent = np.full(g.n, -1, dtype=np.int64)
        dist[root] = 0
        frontier = np.array([root])
        level = 0
        # a cycle found at depth > best/2 cannot improve the answer
        while frontier.size and 2 * level < best:
            level += 1
            new = np.flatnonzero(adj[frontier].any(axis=0) & (dist < 0))
            if new.size:
                hits = adj[np.ix_(new, frontier)]
                parent[new] = frontier[hits.argmax(axis=1)]
                dist[new] = level
            frontier = new
        seen = (dist[eu] >= 0) & (dist[ev] >= 0)
        non_tree = seen & (parent[ev] != eu) & (parent[eu] != ev)
        if non_tree.any():
            best = min(best, int((dist[eu] + dist[ev])[non_tree].min()) + 1)
            if best == 3:
                break
    return ACYCLIC if best == math.inf else int(best)


def bipartition(g: UnitGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-coloring by search parity, or None when an odd cycle exists."""
    color = np.full(g.n, -1, dtype=np.int64)
    for start in range(g.n):
        if color[start] >= 0:
            continue
        dist = bfs_distances(g, start)
        comp = dist >= 0
        color[comp] = dist[comp] % 2
    eu, ev = g.edge_array[:, 0], g.edge_array[:, 1]
    if (color[eu] == color[ev]).any():
        return None
    return (
        frozenset(int(x) for x in np.flatnonzero(color == 0)),
        frozenset(int(x) for x in np.flatnonzero(color == 1)),
    )


def edge_connectivity(g: UnitGraph) -> int:
    """Minimum over ``t != 0`` of the unit-capacity max-flow from vertex 0 to ``t``."""
    if not is_connected(g):
        raise GraphNotConnected(f"G(Z_{g.n}) is not connected")
    u, v = g.edge_array[:, 0], g.edge_array[:, 1]
    rows = np.concatenate([u, v]).astype(np.int32)
    cols = np.concatenate([v, u]).astype(np.int32)
    cap = csr_matrix((np.ones(rows.size, dtype=np.int32), (rows, cols)), shape=(g.n, g.n))
    return min(int(maximum_flow(cap, 0, t, method="dinic").flow_value) for t in range(1, g.n))


@dataclass(frozen=True)
class GraphInvariants:
    connected: bool
    diameter: int | Sentinel | None  # None: skipped for size
    girth: int | Sentinel
    min_degree: int
    edge_connectivity: int | None  # None when disconnected
    bipartition: tuple[frozenset[int], frozenset[int]] | None

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def invariants(g: UnitGraph, diameter_max_n: int = 5000) -> GraphInvariants:
    connected = is_connected(g)
    diam = diameter(g) if g.n <= diameter_max_n else None
    return GraphInvariants(
        connected=connected,
        diameter=diam,
        girth=girth(g),
        min_degree=g.min_degree,
        edge_connectivity=edge_connectivity(g) if connected else None,
        bipartition=bipartition(g),
    )


# -- closed-form predictions --------------------------------------------------


class Shape(str, enum.Enum):
    ODD_PRIME_POWER = "ODD_PRIME_POWER"
    POWER_OF_TWO = "POWER_OF_TWO"
    TWO_ODD_PRIMES = "TWO_ODD_PRIMES"
    TWO_WITH_EVEN = "TWO_WITH_EVEN"
    THREE_ODD_PRIMES = "THREE_ODD_PRIMES"
    THREE_WITH_EVEN = "THREE_WITH_EVEN"
    GENERAL = "GENERAL"

    def __str__(self) -> str:
        return self.value


def shape_of(f: Factorization) -> Shape:
    k = f.num_primes
    if k == 0:
        raise ValueError("n must be >= 2")
    if k >= 4:
        return Shape.GENERAL
    even = f.is_even
    return {
        (1, False): Shape.ODD_PRIME_POWER,
        (1, True): Shape.POWER_OF_TWO,
        (2, False): Shape.TWO_ODD_PRIMES,
        (2, True): Shape.TWO_WITH_EVEN,
        (3, False): Shape.THREE_ODD_PRIMES,
        (3, True): Shape.THREE_WITH_EVEN,
    }[(k, even)]


@dataclass(frozen=True)
class PredictedInvariants:
    shape: Shape
    edge_count: int
    edge_connectivity: int | None = None
    diameter_bound: int | None = None
    girth: int | None = None


def edge_count_predicted(f: Factorization | int) -> int:
    if isinstance(f, int):
        f = factorize(f)
    n, phi = f.n, euler_phi(f)
    return (n - 1) * phi // 2 if f.two_is_unit else n * phi // 2


def predict(f: Factorization | int) -> PredictedInvariants:
    if isinstance(f, int):
        f = factorize(f)
    if f.n < 2:
        raise ValueError(f"n must be >= 2, got {f.n}")
    shape = shape_of(f)
    edges = edge_count_predicted(f)
    if shape is Shape.GENERAL:
        return PredictedInvariants(shape, edges)
    n, phi = f.n, euler_phi(f)
    if f.two_is_unit:
        lam, diam = phi - 1, 2
        # G(Z_3) is the path 1-0-2
        g = None if n == 3 else 3
    else:
        lam = phi
        diam = 2 if shape is Shape.POWER_OF_TWO else 3
        if n == 2:
            g = None  # a single edge
        elif n == 6:
            g = 6
        else:
            g = 4
    return PredictedInvariants(shape, edges, lam, diam, g)


def conjectured_diameter_bound(f: Factorization) -> int:
    """Diameter bound conjectured for every n: 2 when n is odd, 3 when even."""
    return 2 if f.two_is_unit else 3
