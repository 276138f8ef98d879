"""Steiner hypertrees: fixed-terminal search plus an exhaustive oracle.

The fixed-terminal search enumerates small Steiner trees on the terminals
plus at most ``k - 2`` branch labels, and for each one looks for an
embedding into the incidence graph where branch labels land on original
vertices and tree edges become internally vertex-disjoint paths. The
hyperedge nodes on those paths then read off as a trimming.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .hypercore import (
    Hypergraph,
    HypergraphError,
    IncidenceGraph,
    LabelledTree,
    OracleScaleError,
    incidence_graph,
    is_tree,
    trim,
)

ORACLE_MAX_EDGES = 12
ORACLE_MAX_EDGE_SIZE = 6


class InvalidTerminalsError(HypergraphError):
    pass


@dataclass(frozen=True, order=True)
class Branch:
    """Abstract non-terminal label of a small Steiner tree."""

    index: int

    def __repr__(self):
        return f"Branch({self.index})"


@dataclass(frozen=True)
class SmallSteinerTree:
    tree: LabelledTree
    terminals: frozenset

    @property
    def branches(self) -> list[Branch]:
        return sorted(x for x in self.tree.labels if x not in self.terminals)


@dataclass(frozen=True)
class ShtCertificate:
    """Trimming of a hyperedge subset: ``choice[edge_index] = (u, v)``."""

    choice: Mapping[int, tuple[int, int]] = field(default_factory=dict)

    def pairs(self) -> list[tuple[int, int]]:
        return [tuple(self.choice[i]) for i in sorted(self.choice)]

    def vertices(self) -> set[int]:
        return {v for pair in self.choice.values() for v in pair}


@dataclass(frozen=True)
class SpecialSubdivision:
    phi: Mapping
    paths: Mapping[frozenset, list[int]]

    def to_certificate(self, inc: IncidenceGraph) -> ShtCertificate:
        """Contract each hyperedge node (degree 2 on its path) into a trimmed edge."""
        choice = {}
        for path in self.paths.values():
            for i in range(1, len(path) - 1):
                node = path[i]
                if not inc.is_original(node):
                    choice[inc.edge_of(node)] = (path[i - 1], path[i + 1])
        return ShtCertificate(choice)


# --- labelled trees ---------------------------------------------------------

def prufer_decode(seq: Sequence[int], j: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``0..j-1`` with Prüfer sequence ``seq``."""
    degree = [1] * j
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(j) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(j) if degree[v] == 1)
    edges.append((u, w))
    return edges


def labelled_trees(labels: Sequence) -> Iterator[LabelledTree]:
    """Every labelled tree on exactly ``labels`` (``j**(j-2)`` of them)."""
    labels = list(labels)
    j = len(labels)
    if j == 0:
        return
    if j == 1:
        yield LabelledTree(labels)
        return
    for seq in product(range(j), repeat=j - 2):
        yield LabelledTree(labels, [(labels[a], labels[b]) for a, b in prufer_decode(seq, j)])


def _canonical_key(tree: LabelledTree, order: dict) -> tuple:
    return tuple(sorted(tuple(sorted(order[x] for x in e)) for e in tree.edges))


def _is_canonical(tree: LabelledTree, terminals: Sequence, branches: Sequence[Branch]) -> bool:
    """True if no relabelling of the branch labels gives a smaller edge list."""
    base = {t: (0, i) for i, t in enumerate(terminals)}
    own = _canonical_key(tree, {**base, **{b: (1, i) for i, b in enumerate(branches)}})
    for perm in permutations(range(len(branches))):
        order = {**base, **{b: (1, p) for b, p in zip(branches, perm)}}
        if _canonical_key(tree, order) < own:
            return False
    return True


def enumerate_small_trees(terminals: Iterable, canonical: bool = False) -> Iterator[SmallSteinerTree]:
    """Labelled trees containing all ``k`` terminals, drawn from ``k - 2`` branch labels,
    in which every branch label has degree at least 3.

    With ``canonical=True`` only one representative per relabelling of branch
    labels is emitted; that is all an embedding search needs.
    """
    terms = sorted(terminals)
    k = len(terms)
    if k < 2:
        raise InvalidTerminalsError("small Steiner trees need at least two terminals")
    pool = [Branch(i) for i in range(k - 2)]
    for r in range(k - 1):
        subsets = [pool[:r]] if canonical else combinations(pool, r)
        for subset in subsets:
            for tree in labelled_trees(terms + list(subset)):
                if any(tree.degree(b) < 3 for b in subset):
                    continue
                if canonical and r > 1 and not _is_canonical(tree, terms, subset):
                    continue
                yield SmallSteinerTree(tree, frozenset(terms))


# --- disjoint paths ---------------------------------------------------------

def _reachable_avoiding(adj, u, v, blocked) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w == v:
                return True
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return False


def _simple_paths(adj, u, v, blocked) -> Iterator[list[int]]:
    path = [u]
    on_path = {u}

    def extend(x):
        for w in adj[x]:
            if w == v:
                path.append(v)
                yield list(path)
                path.pop()
            elif w not in blocked and w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from extend(w)
                path.pop()
                on_path.discard(w)

    yield from extend(u)


def disjoint_paths(adj: Sequence[Sequence[int]], pairs: Sequence[tuple[int, int]]) -> list[list[int]] | None:
    """Pairwise internally vertex-disjoint ``u_i v_i``-paths, or None if impossible.

    Exact backtracking: pairs are routed one at a time over simple paths whose
    interior avoids every endpoint and every vertex already used by an earlier
    path.
    """
    pairs = list(pairs)
    endpoints = {x for pair in pairs for x in pair}
    used = set(endpoints)

    def route(i):
        if i == len(pairs):
            return []
        for u, v in pairs[i:]:
            if u != v and not _reachable_avoiding(adj, u, v, used):
                return None
        u, v = pairs[i]
        if u == v:
            rest = route(i + 1)
            return None if rest is None else [[u]] + rest
        for path in _simple_paths(adj, u, v, used):
            interior = path[1:-1]
            used.update(interior)
            rest = route(i + 1)
            used.difference_update(interior)
            if rest is not None:
                return [path] + rest
        return None

    return route(0)


# --- fixed-terminal algorithm -----------------------------------------------

def _check_terminals(h: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    if any(not 0 <= v < h.n for v in s):
        raise InvalidTerminalsError("terminals must be vertices of the hypergraph")
    return s


def find_special_subdivision(
    t: SmallSteinerTree, h: Hypergraph, inc: IncidenceGraph | None = None
) -> SpecialSubdivision | None:
    inc = inc or incidence_graph(h)
    adj = inc.adjacency()
    tree = t.tree
    degree = [len(adj[v]) for v in range(h.n)]
    if any(degree[s] < tree.degree(s) for s in t.terminals):
        return None
    branches = t.branches
    candidates = [v for v in range(h.n) if v not in t.terminals]
    edges = sorted(tree.edges, key=lambda e: sorted(map(repr, e)))
    for images in permutations(candidates, len(branches)):
        phi = {s: s for s in t.terminals}
        phi.update(zip(branches, images))
        # each incident tree edge leaves through its own hyperedge node
        if any(degree[phi[b]] < tree.degree(b) for b in branches):
            continue
        pairs = [tuple(phi[x] for x in sorted(e, key=repr)) for e in edges]
        paths = disjoint_paths(adj, pairs)
        if paths is not None:
            return SpecialSubdivision(phi, dict(zip(edges, paths)))
    return None


def solve_sht(h: Hypergraph, s: Iterable[int]) -> ShtCertificate | None:
    """Certificate iff ``h`` has a subhypergraph trimmable to a tree containing ``s``."""
    s = _check_terminals(h, s)
    if len(s) <= 1:
        return ShtCertificate({})
    inc = incidence_graph(h)
    for t in enumerate_small_trees(s, canonical=True):
        sub = find_special_subdivision(t, h, inc)
        if sub is not None:
            return sub.to_certificate(inc)
    return None


# --- oracle and verification ------------------------------------------------

def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def sht_oracle(h: Hypergraph, s: Iterable[int]) -> ShtCertificate | None:
    """Exhaustive search over acyclic trimmings of hyperedge subsets."""
    s = _check_terminals(h, s)
    if h.m > ORACLE_MAX_EDGES or any(len(e) > ORACLE_MAX_EDGE_SIZE for e in h.edges):
        raise OracleScaleError(
            f"oracle limited to {ORACLE_MAX_EDGES} hyperedges of size <= {ORACLE_MAX_EDGE_SIZE}"
        )
    if len(s) <= 1:
        return ShtCertificate({})
    terms = sorted(s)
    options = [list(combinations(sorted(e), 2)) for e in h.edges]
    chosen: dict[int, tuple[int, int]] = {}

    def feasible(i):
        # chosen pairs plus every undecided hyperedge must still tie everything together
        parent = list(range(h.n))
        for u, v in chosen.values():
            parent[_find(parent, u)] = _find(parent, v)
        for e in h.edges[i:]:
            first, *rest = e
            for v in rest:
                parent[_find(parent, v)] = _find(parent, first)
        root = _find(parent, terms[0])
        touched = terms + [v for pair in chosen.values() for v in pair]
        return all(_find(parent, v) == root for v in touched)

    def forest():
        parent = list(range(h.n))
        for a, b in chosen.values():
            parent[_find(parent, a)] = _find(parent, b)
        return parent

    def search(i):
        if not feasible(i):
            return False
        if i == h.m:
            pairs = list(chosen.values())
            verts = {v for p in pairs for v in p}
            return is_tree(verts, pairs) and s <= verts
        parent = forest()
        for u, v in options[i]:
            if _find(parent, u) != _find(parent, v):
                chosen[i] = (u, v)
                if search(i + 1):
                    return True
                del chosen[i]
        return search(i + 1)

    if search(0):
        return ShtCertificate(dict(chosen))
    return None


def verify_sht_certificate(h: Hypergraph, s: Iterable[int], cert: ShtCertificate) -> bool:
    try:
        s = _check_terminals(h, s)
        g = trim(h, cert.choice)
    except (HypergraphError, TypeError, ValueError):
        return False
    pairs = [tuple(e) for e in g.edges]
    if not pairs:
        return len(s) <= 1
    verts = {v for p in pairs for v in p}
    return s <= verts and is_tree(verts, pairs)


def format_certificate(h: Hypergraph, cert: ShtCertificate) -> str:
    return "".join(
        f"{i} {h.names[u]} {h.names[v]}\n" for i, (u, v) in sorted(cert.choice.items())
    )


def parse_certificate(text: str, h: Hypergraph) -> ShtCertificate:
    choice = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise HypergraphError(f"bad certificate line: {line!r}")
        choice[int(parts[0])] = (h.index(parts[1]), h.index(parts[2]))
    return ShtCertificate(choice)
