"""Local edge-connectivity of hypergraphs and dypergraphs.

Flow-based routines are the production path; the ``*_brute`` functions
enumerate every separating vertex set and serve as independent oracles.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

from .hypercore import Dypergraph, Hypergraph, HypergraphError, OracleScaleError, digraph_expansion

BRUTE_MAX_VERTICES = 20


class InvalidQueryError(HypergraphError):
    pass


class FlowNetwork:
    """Integer-capacity network solved by shortest augmenting paths."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_arc(self, u: int, v: int, cap: int) -> None:
        # arc k and its residual twin k ^ 1
        self.adj[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)

    def max_flow(self, source: int, sink: int, limit: int | None = None) -> int:
        """Max flow value, stopping early once ``limit`` is reached."""
        cap = list(self.cap)
        flow = 0
        while limit is None or flow < limit:
            parent = [-1] * self.num_nodes
            parent[source] = -2
            queue = deque([source])
            while queue and parent[sink] == -1:
                u = queue.popleft()
                for k in self.adj[u]:
                    w = self.head[k]
                    if cap[k] > 0 and parent[w] == -1:
                        parent[w] = k
                        queue.append(w)
            if parent[sink] == -1:
                break
            path = []
            node = sink
            while node != source:
                k = parent[node]
                path.append(k)
                node = self.head[k ^ 1]
            push = min(cap[k] for k in path)
            if limit is not None:
                push = min(push, limit - flow)
            for k in path:
                cap[k] -= push
                cap[k ^ 1] += push
            flow += push
        return flow


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise InvalidQueryError("connectivity between a vertex and itself is undefined")
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidQueryError(f"vertex out of range: {u}, {v}")


def hyper_network(h: Hypergraph) -> FlowNetwork:
    """Vertex nodes, then an (in, out) node pair per hyperedge joined by a unit arc."""
    inf = h.m + 1
    net = FlowNetwork(h.n + 2 * h.m)
    for i, e in enumerate(h.edges):
        e_in, e_out = h.n + 2 * i, h.n + 2 * i + 1
        net.add_arc(e_in, e_out, 1)
        for v in sorted(e):
            net.add_arc(v, e_in, inf)
            net.add_arc(e_out, v, inf)
    return net


def dyper_network(d: Dypergraph) -> FlowNetwork:
    g = digraph_expansion(d)
    net = FlowNetwork(g.num_nodes)
    for u, v in g.arcs:
        net.add_arc(u, v, 1)
    return net


def lambda_hyper(h: Hypergraph, u: int, v: int, limit: int | None = None,
                 network: FlowNetwork | None = None) -> int:
    _check_pair(h.n, u, v)
    net = network or hyper_network(h)
    return net.max_flow(u, v, limit)


def lambda_dyper(d: Dypergraph, u: int, v: int, limit: int | None = None,
                 network: FlowNetwork | None = None) -> int:
    """Unit-capacity max flow from ``u`` to ``v`` in the digraph expansion."""
    _check_pair(d.n, u, v)
    net = network or dyper_network(d)
    return net.max_flow(u, v, limit)


def _separating_sets(n: int, inside: int, outside: int) -> Iterable[set[int]]:
    if n > BRUTE_MAX_VERTICES:
        raise OracleScaleError(f"brute-force cuts limited to {BRUTE_MAX_VERTICES} vertices")
    rest = [w for w in range(n) if w not in (inside, outside)]
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            yield {inside, *extra}


def lambda_hyper_brute(h: Hypergraph, u: int, v: int) -> int:
    _check_pair(h.n, u, v)
    return min(h.cut(xs) for xs in _separating_sets(h.n, u, v))


def lambda_dyper_brute(d: Dypergraph, u: int, v: int) -> int:
    _check_pair(d.n, u, v)
    return min(d.in_cut(xs) for xs in _separating_sets(d.n, v, u))


def reachable_set(d: Dypergraph, u: int) -> set[int]:
    """Original vertices reachable from ``u``."""
    g = digraph_expansion(d)
    succ = g.successors()
    seen = {u}
    queue = deque([u])
    while queue:
        for w in succ[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return {w for w in seen if w < d.n}


def reachable(d: Dypergraph, u: int, v: int) -> bool:
    return u == v or v in reachable_set(d, u)


def strongly_connected_in(d: Dypergraph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(s <= reachable_set(d, u) | {u} for u in s)
