"""Slow, independent reference implementations used to check the package.

Nothing here imports from ``unitcodes``; everything is plain Python loops.
"""

from __future__ import annotations

import itertools
import math
from collections import deque


def phi(n: int) -> int:
    return sum(1 for x in range(1, n + 1) if math.gcd(x, n) == 1)


def units(n: int) -> set[int]:
    return {x for x in range(n) if math.gcd(x, n) == 1}


def unit_graph_edges(n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(n) for y in range(x + 1, n) if math.gcd((x + y) % n, n) == 1]


def adjacency(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs(adj, s: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter(adj) -> int | None:
    """None when disconnected."""
    best = 0
    for s in range(len(adj)):
        d = bfs(adj, s)
        if min(d) < 0:
            return None
        best = max(best, max(d))
    return best


def girth(n: int, edges) -> int | None:
    """Shortest cycle: for each edge, shortest path between its ends without it."""
    best = None
    for u, v in edges:
        rest = [e for e in edges if e != (u, v)]
        d = bfs(adjacency(n, rest), u)[v]
        if d > 0 and (best is None or d + 1 < best):
            best = d + 1
    return best


def is_bipartite(adj) -> bool:
    color = [-1] * len(adj)
    for s in range(len(adj)):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def max_flow(n: int, edges, s: int, t: int) -> int:
    """Edmonds-Karp with unit capacity in both directions of every edge."""
    cap = [[0] * n for _ in range(n)]
    for u, v in edges:
        cap[u][v] += 1
        cap[v][u] += 1
    flow = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            for v in range(n):
                if cap[u][v] > 0 and parent[v] < 0:
                    parent[v] = u
                    queue.append(v)
        if parent[t] < 0:
            return flow
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1


def edge_connectivity(n: int, edges) -> int:
    return min(max_flow(n, edges, 0, t) for t in range(1, n))


# -- linear algebra over F_q ---------------------------------------------------


def rank(rows: list[list[int]], q: int) -> int:
    m = [[x % q for x in r] for r in rows]
    if not m:
        return 0
    cols = len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [x * inv % q for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def incidence(n: int, edges) -> list[list[int]]:
    h = [[0] * len(edges) for _ in range(n)]
    for j, (u, v) in enumerate(edges):
        h[u][j] = 1
        h[v][j] = 1
    return h


def codewords(rows: list[list[int]], q: int):
    """Every codeword, by all q^r combinations of the spanning rows."""
    length = len(rows[0])
    seen = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        w = tuple(sum(a * r[j] for a, r in zip(coeffs, rows)) % q for j in range(length))
        if w not in seen:
            seen.add(w)
            yield w


def min_distance(rows: list[list[int]], q: int) -> int:
    return min(sum(1 for x in w if x) for w in codewords(rows, q) if any(w))


def dual_distance(rows: list[list[int]], q: int, limit: int = 8) -> int | None:
    """Fewest columns of ``rows`` that are linearly dependent, up to ``limit``."""
    cols = [list(c) for c in zip(*rows)]
    for s in range(1, limit + 1):
        for subset in itertools.combinations(range(len(cols)), s):
            # s columns are dependent iff the rank of the submatrix is < s
            if rank([cols[j] for j in subset], q) < s:
                return s
    return None
