"""Exact k-per-row-and-column extraction via maximum flow.

A planar point set is a bipartite graph (rows vs columns, one edge per
point).  It contains a spanning k-regular subgraph exactly when the
Ore-Ryser condition e(A, B0 \\ B) >= k(|A| - |B|) holds for all row subsets
A and column subsets B; this module realizes the criterion as a max-flow
computation (source->row arcs of capacity k, edge arcs of capacity 1,
column->sink arcs of capacity k) and extracts a witnessing (A, B) pair from
the minimum cut whenever the flow value falls short of k*n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Set, Tuple, Union

from .geometry import GridParams
from .pointset import PointSet


@dataclass(frozen=True)
class BipartiteGraph:
    """Rows/columns incidence structure; both sides have n vertices (1-based)."""

    n: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        for (r, c) in self.edges:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise ValueError(f"edge ({r},{c}) outside [1,{self.n}]^2")

    def degree_row(self, r: int) -> int:
        return sum(1 for e in self.edges if e[0] == r)

    def degree_col(self, c: int) -> int:
        return sum(1 for e in self.edges if e[1] == c)


@dataclass(frozen=True)
class HallCertificate:
    """A pair (A, B) violating e(A, B0 \\ B) >= k(|A| - |B|); deficiency > 0."""

    A: FrozenSet[int]
    B: FrozenSet[int]
    deficiency: int
    pair_type: str


EdgeSet = FrozenSet[Tuple[int, int]]


def to_bipartite(S: PointSet, g: GridParams) -> BipartiteGraph:
    """Edge (i, j) present iff (i, j) in S; first coordinate is the row."""
    if S.d != 2:
        raise ValueError("to_bipartite expects a planar point set")
    return BipartiteGraph(n=g.n, edges=frozenset((x, y) for (x, y) in S.points))


class _Dinic:
    # Adjacency as arc lists; arcs stored as [to, cap]; arc i^1 is the reverse.

    def __init__(self, num_nodes: int):
        self.adj: List[List[int]] = [[] for _ in range(num_nodes)]
        self.to: List[int] = []
        self.cap: List[int] = []

    def add_edge(self, u: int, v: int, c: int) -> int:
        idx = len(self.to)
        self.adj[u].append(idx)
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * len(self.adj)
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for i in self.adj[u]:
                    if self.cap[i] > 0 and level[self.to[i]] < 0:
                        level[self.to[i]] = level[u] + 1
                        q.append(self.to[i])
            if level[t] < 0:
                return flow
            it = [0] * len(self.adj)

            def dfs(u: int, f: int) -> int:
                if u == t:
                    return f
                while it[u] < len(self.adj[u]):
                    i = self.adj[u][it[u]]
                    v = self.to[i]
                    if self.cap[i] > 0 and level[v] == level[u] + 1:
                        d = dfs(v, min(f, self.cap[i]))
                        if d > 0:
                            self.cap[i] -= d
                            self.cap[i ^ 1] += d
                            return d
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 60)
                if pushed == 0:
                    break
                flow += pushed

    def source_side(self, s: int) -> Set[int]:
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for i in self.adj[u]:
                if self.cap[i] > 0 and self.to[i] not in seen:
                    seen.add(self.to[i])
                    q.append(self.to[i])
        return seen


def k_regular_subgraph(G: BipartiteGraph, k: int) -> Union[EdgeSet, HallCertificate]:
    """A spanning k-regular edge set of G, or a verified Hall certificate.

    Nodes: 0 source, 1..n rows, n+1..2n columns, 2n+1 sink.  Arc order is
    fixed by sorted(edges), so the chosen subgraph is deterministic.
    """
    n = G.n
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    dinic = _Dinic(2 * n + 2)
    s, t = 0, 2 * n + 1
    for r in range(1, n + 1):
        dinic.add_edge(s, r, k)
    edge_list = sorted(G.edges)
    edge_arcs = [dinic.add_edge(r, n + c, 1) for (r, c) in edge_list]
    for c in range(1, n + 1):
        dinic.add_edge(n + c, t, k)
    flow = dinic.max_flow(s, t)
    if flow == k * n:
        chosen = frozenset(e for e, arc in zip(edge_list, edge_arcs) if dinic.cap[arc] == 0)
        return chosen
    side = dinic.source_side(s)
    A = frozenset(r for r in range(1, n + 1) if r in side)
    B = frozenset(c for c in range(1, n + 1) if (n + c) in side)
    e_out = sum(1 for (r, c) in G.edges if r in A and c not in B)
    deficiency = k * (len(A) - len(B)) - e_out
    cert = HallCertificate(A=A, B=B, deficiency=deficiency,
                           pair_type=_primary_type(A, B, n))
    assert verify_certificate(G, k, cert), "min cut failed to produce a Hall violation"
    return cert


def verify_certificate(G: BipartiteGraph, k: int, cert: HallCertificate) -> bool:
    """True iff (A, B) genuinely violates the Ore-Ryser inequality."""
    e_out = sum(1 for (r, c) in G.edges if r in cert.A and c not in cert.B)
    return e_out < k * (len(cert.A) - len(cert.B))


def classify_pair(A, B, g: GridParams) -> List[str]:
    """All applicable labels among {0,1,2,3,1*,2*,3*}; nonempty for any pair.

    The starred types are the unstarred ones applied to the complementary
    pair (B0 \\ B, A0 \\ A).
    """
    n = g.n
    a, b = len(set(A)), len(set(B))
    ca, cb = n - a, n - b  # complements
    labels = []
    if b >= a:
        labels.append("0")
    if a > 2 * b:
        labels.append("1")
    if 10 * a >= n and 2 * b <= n:
        labels.append("2")
    if b < a <= 2 * b and 10 * b <= n:
        labels.append("3")
    if cb > 2 * ca:
        labels.append("1*")
    if 10 * cb >= n and 2 * ca <= n:
        labels.append("2*")
    if ca < cb <= 2 * ca and 10 * ca <= n:
        labels.append("3*")
    return labels


def _primary_type(A, B, n: int) -> str:
    labels = classify_pair(A, B, GridParams(n))
    return labels[0] if labels else "?"


def regularize(S: PointSet, k: int, g: GridParams) -> Union[PointSet, HallCertificate]:
    """Subset of S with exactly k points in every row and column, or a
    verified certificate of impossibility.

    |S| < k*n short-circuits: (A0, empty) is already a Hall violation then.
    """
    G = to_bipartite(S, g)
    n = g.n
    if len(S) < k * n:
        cert = HallCertificate(
            A=frozenset(range(1, n + 1)), B=frozenset(),
            deficiency=k * n - len(S), pair_type=_primary_type(range(1, n + 1), (), n))
        assert verify_certificate(G, k, cert)
        return cert
    result = k_regular_subgraph(G, k)
    if isinstance(result, HallCertificate):
        return result
    return PointSet.of(g.n, result)
