"""Orientation problems: rooted and strong Steiner connectivity, well-balancedness."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Callable, Iterable, Sequence

from .connectivity import (
    dyper_network,
    hyper_network,
    lambda_dyper,
    lambda_hyper,
    reachable_set,
    strongly_connected_in,
)
from .hypercore import (
    Hypergraph,
    HypergraphError,
    OracleScaleError,
    Orientation,
    check_orientation,
    digraph_expansion,
    orient,
)
from .steiner import solve_sht

EXHAUSTIVE_MAX_ORIENTATIONS = 10**6


class InvalidInstanceError(HypergraphError):
    pass


class NotApplicableError(HypergraphError):
    pass


@dataclass(frozen=True)
class SrcohInstance:
    h: Hypergraph
    r: int
    s: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "s", frozenset(self.s))
        if not 0 <= self.r < self.h.n or any(not 0 <= v < self.h.n for v in self.s):
            raise InvalidInstanceError("root and terminals must be vertices of h")


@dataclass(frozen=True)
class WellBalancedReport:
    verdict: bool
    witness: tuple[int, int] | None = None
    lambda_orient: int | None = None
    lambda_hyper: int | None = None


def default_orientation(h: Hypergraph) -> Orientation:
    return tuple(min(e) for e in h.edges)


def rooted_connected(h: Hypergraph, heads: Sequence[int], r: int, s: Iterable[int]) -> bool:
    return set(s) <= reachable_set(orient(h, heads), r) | {r}


def solve_srcoh(inst: SrcohInstance) -> Orientation | None:
    """Orientation in which every terminal is reachable from the root, or None.

    A Steiner hypertree on ``S + r`` is oriented away from ``r``; hyperedges
    outside it get their lowest-index member as head.
    """
    h, r = inst.h, inst.r
    cert = solve_sht(h, inst.s | {r})
    if cert is None:
        return None
    heads = list(default_orientation(h))
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, (u, v) in cert.choice.items():
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    seen = {r}
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for v, i in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                heads[i] = v
                queue.append(v)
    return tuple(heads)


def all_orientations(h: Hypergraph):
    total = prod(len(e) for e in h.edges)
    if total > EXHAUSTIVE_MAX_ORIENTATIONS:
        raise OracleScaleError(
            f"{total} orientations exceed the limit of {EXHAUSTIVE_MAX_ORIENTATIONS}"
        )
    return product(*(sorted(e) for e in h.edges))


def _first(h: Hypergraph, accept: Callable[[Orientation], bool]) -> Orientation | None:
    for heads in all_orientations(h):
        if accept(heads):
            return tuple(heads)
    return None


def srcoh_oracle(inst: SrcohInstance) -> Orientation | None:
    return _first(inst.h, lambda o: rooted_connected(inst.h, o, inst.r, inst.s))


def sscoh_exhaustive(h: Hypergraph, s: Iterable[int]) -> Orientation | None:
    s = frozenset(s)
    return _first(h, lambda o: strongly_connected_in(orient(h, o), s))


def wboh_exhaustive(h: Hypergraph) -> Orientation | None:
    return _first(h, lambda o: is_well_balanced(h, o).verdict)


def is_well_balanced(h: Hypergraph, heads: Sequence[int]) -> WellBalancedReport:
    """Check ``lambda_orient(u, v) >= lambda_hyper(u, v) // 2`` for all ordered pairs."""
    heads = check_orientation(h, heads)
    d = orient(h, heads)
    hnet, dnet = hyper_network(h), dyper_network(d)
    half = {}
    for u in range(h.n):
        for v in range(u + 1, h.n):
            half[u, v] = half[v, u] = lambda_hyper(h, u, v, network=hnet)
    for u in range(h.n):
        for v in range(h.n):
            if u == v:
                continue
            need = half[u, v] // 2
            if need == 0:
                continue
            got = lambda_dyper(d, u, v, limit=need, network=dnet)
            if got < need:
                return WellBalancedReport(False, (u, v), got, half[u, v])
    return WellBalancedReport(True)


def reorient_to_head(
    h: Hypergraph, heads: Sequence[int], e: int, x: int, avoid: Iterable[int] = ()
) -> Orientation:
    """Make ``x`` the head of hyperedge ``e`` without changing any connectivity value.

    A shortest directed path from the current head to ``x`` in the digraph
    expansion closes, through the node of ``e``, into a circuit; reversing it
    re-heads every dyperedge on the circuit at the vertex preceding it.
    Dyperedges listed in ``avoid`` are kept off the path.
    """
    heads = list(check_orientation(h, heads))
    if not 0 <= e < h.m or x not in h.edges[e]:
        raise NotApplicableError(f"vertex {x} is not in hyperedge {e}")
    if heads[e] == x:
        return tuple(heads)
    g = digraph_expansion(orient(h, heads))
    succ = g.successors()
    blocked = {h.n + i for i in avoid} | {h.n + e}
    start = heads[e]
    parent = {start: None}
    queue = deque([start])
    while queue and x not in parent:
        u = queue.popleft()
        for w in succ[u]:
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    if x not in parent:
        raise NotApplicableError(f"vertex {x} is not reachable from the head of hyperedge {e}")
    path = [x]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()  # start ... x
    for i, node in enumerate(path):
        if not g.is_original(node):
            heads[g.item_of(node)] = path[i - 1]
    heads[e] = x
    return tuple(heads)
