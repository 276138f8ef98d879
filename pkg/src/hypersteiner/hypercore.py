"""Hypergraphs, dypergraphs and the structural transformations between them.

Vertices are dense integer indices ``0..n-1``. Display names live in a side
registry (``names``) and are only consulted for I/O.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Orientation = tuple[int, ...]
TrimChoice = Mapping[int, tuple[int, int]]


class HypergraphError(ValueError):
    """Base class for malformed structures and violated preconditions."""


class InvalidChoiceError(HypergraphError):
    pass


class InvalidOrientationError(HypergraphError):
    pass


class OracleScaleError(HypergraphError):
    """Input too large for an exhaustive routine."""


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus an ordered list of hyperedges.

    Parallel hyperedges are distinct list entries and keep their own index.
    """

    n: int
    edges: tuple[frozenset[int], ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        if not self.names:
            object.__setattr__(self, "names", _default_names(self.n))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if self.n < 0:
            raise HypergraphError("vertex count must be non-negative")
        if len(self.names) != self.n:
            raise HypergraphError(f"expected {self.n} names, got {len(self.names)}")
        if len(set(self.names)) != self.n:
            raise HypergraphError("vertex names must be unique")
        for i, e in enumerate(self.edges):
            if len(e) < 2:
                raise HypergraphError(f"hyperedge {i} has fewer than 2 vertices")
            if any(not 0 <= v < self.n for v in e):
                raise HypergraphError(f"hyperedge {i} references an unknown vertex")

    @classmethod
    def from_named(
        cls, edges: Iterable[Iterable[str]], vertices: Sequence[str] = ()
    ) -> "Hypergraph":
        """Build from named hyperedges; unseen names are registered in order."""
        names = list(vertices)
        index = {name: i for i, name in enumerate(names)}
        built = []
        for e in edges:
            members = set()
            for name in e:
                if name not in index:
                    index[name] = len(names)
                    names.append(name)
                members.add(index[name])
            built.append(frozenset(members))
        return cls(len(names), tuple(built), tuple(names))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise HypergraphError(f"unknown vertex {name!r}") from None

    def indices(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(name) for name in names)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def cut(self, xs: Iterable[int]) -> int:
        """Number of hyperedges meeting both ``xs`` and its complement."""
        xs = set(xs)
        return sum(1 for e in self.edges if e & xs and e - xs)

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.edges + tuple(frozenset(e) for e in extra), self.names)

    def subhypergraph(self, keep: Iterable[int]) -> "Hypergraph":
        """Same vertices, only the hyperedges at the given indices (in order)."""
        return Hypergraph(self.n, tuple(self.edges[i] for i in keep), self.names)


@dataclass(frozen=True)
class Dypergraph:
    """Directed hypergraph: each dyperedge is ``(tail, head)``."""

    n: int
    arcs: tuple[tuple[frozenset[int], int], ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "arcs", tuple((frozenset(t), h) for t, h in self.arcs)
        )
        if not self.names:
            object.__setattr__(self, "names", _default_names(self.n))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.n:
            raise HypergraphError(f"expected {self.n} names, got {len(self.names)}")
        for i, (tail, head) in enumerate(self.arcs):
            if not tail or head in tail:
                raise HypergraphError(f"dyperedge {i} needs a nonempty tail without its head")
            if not 0 <= head < self.n or any(not 0 <= v < self.n for v in tail):
                raise HypergraphError(f"dyperedge {i} references an unknown vertex")

    def in_cut(self, xs: Iterable[int]) -> int:
        """Number of dyperedges entering ``xs``."""
        xs = set(xs)
        return sum(1 for tail, head in self.arcs if head in xs and tail - xs)


@dataclass(frozen=True)
class Digraph:
    """Plain digraph; nodes ``>= num_original`` stand for hyperedges/dyperedges."""

    num_nodes: int
    arcs: tuple[tuple[int, int], ...]
    num_original: int

    def is_original(self, node: int) -> bool:
        return node < self.num_original

    def item_of(self, node: int) -> int:
        """Hyperedge/dyperedge index behind an auxiliary node."""
        if node < self.num_original:
            raise HypergraphError(f"node {node} is an original vertex")
        return node - self.num_original

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for u, v in self.arcs:
            out[u].append(v)
        return out


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite graph: original vertices ``0..n-1`` then one node per hyperedge."""

    graph: Hypergraph
    num_original: int

    def is_original(self, node: int) -> bool:
        return node < self.num_original

    def edge_of(self, node: int) -> int:
        if node < self.num_original:
            raise HypergraphError(f"node {node} is an original vertex")
        return node - self.num_original

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.graph.n)]
        for e in self.graph.edges:
            u, v = sorted(e)
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class LabelledTree:
    """A tree on explicit (hashable) labels. A lone label with no edges is allowed."""

    labels: frozenset
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(self.labels))
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in self.edges))
        if not self.labels:
            raise HypergraphError("a tree needs at least one label")
        for e in self.edges:
            if len(e) != 2 or not e <= self.labels:
                raise HypergraphError(f"bad tree edge {set(e)}")
        if len(self.edges) != len(self.labels) - 1 or not _connected(self.labels, self.edges):
            raise HypergraphError("edges do not form a spanning tree on the labels")

    def degree(self, label) -> int:
        return sum(1 for e in self.edges if label in e)

    def neighbours(self, label) -> list:
        return [next(iter(e - {label})) for e in self.edges if label in e]


def _connected(labels, edges) -> bool:
    labels = set(labels)
    start = next(iter(labels))
    seen = {start}
    stack = [start]
    adj: dict = {x: [] for x in labels}
    for e in edges:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == labels


def is_tree(vertices: Iterable[int], pairs: Sequence[tuple[int, int]]) -> bool:
    """True iff ``pairs`` form a (simple) tree on exactly ``vertices``."""
    vertices = set(vertices)
    if not vertices or len(pairs) != len(vertices) - 1:
        return False
    if any(u == v or u not in vertices or v not in vertices for u, v in pairs):
        return False
    return _connected(vertices, [frozenset(p) for p in pairs])


def trim(h: Hypergraph, choice: TrimChoice) -> Hypergraph:
    """Replace each chosen hyperedge by the given pair; unchosen ones are dropped.

    The result keeps ``h``'s vertex registry and lists edges in ascending
    hyperedge index.
    """
    edges = []
    for i in sorted(choice):
        if not 0 <= i < h.m:
            raise InvalidChoiceError(f"no hyperedge {i}")
        u, v = choice[i]
        if u == v or u not in h.edges[i] or v not in h.edges[i]:
            raise InvalidChoiceError(f"pair ({u}, {v}) is not inside hyperedge {i}")
        edges.append(frozenset((u, v)))
    return Hypergraph(h.n, tuple(edges), h.names)


def incidence_graph(h: Hypergraph) -> IncidenceGraph:
    names = h.names + tuple(f"z{i}" for i in range(h.m))
    # keep auxiliary names unique even if the registry already uses "z<i>"
    if len(set(names)) != len(names):
        names = h.names + tuple(f"#z{i}" for i in range(h.m))
    edges = [
        frozenset((v, h.n + i)) for i, e in enumerate(h.edges) for v in sorted(e)
    ]
    return IncidenceGraph(Hypergraph(h.n + h.m, tuple(edges), names), h.n)


def check_orientation(h: Hypergraph, heads: Sequence[int]) -> Orientation:
    if len(heads) != h.m:
        raise InvalidOrientationError(f"expected {h.m} heads, got {len(heads)}")
    for i, (e, x) in enumerate(zip(h.edges, heads)):
        if x not in e:
            raise InvalidOrientationError(f"head {x} is not in hyperedge {i}")
    return tuple(heads)


def orient(h: Hypergraph, heads: Sequence[int]) -> Dypergraph:
    heads = check_orientation(h, heads)
    return Dypergraph(h.n, tuple((e - {x}, x) for e, x in zip(h.edges, heads)), h.names)


def digraph_expansion(d: Dypergraph) -> Digraph:
    arcs = []
    for i, (tail, head) in enumerate(d.arcs):
        z = d.n + i
        arcs.extend((v, z) for v in sorted(tail))
        arcs.append((z, head))
    return Digraph(d.n + len(d.arcs), tuple(arcs), d.n)


def underlying_hypergraph(d: Dypergraph) -> Hypergraph:
    return Hypergraph(d.n, tuple(tail | {head} for tail, head in d.arcs), d.names)


# --- text formats -----------------------------------------------------------

VERTEX_PRAGMA = "# vertices:"


def parse_hypergraph(text: str) -> Hypergraph:
    """Read ``n m`` then one hyperedge per line; ``#`` lines are comments.

    A ``# vertices: a b c`` comment, when present, fixes the registry order
    (and names isolated vertices). Otherwise names are registered in order of
    first appearance and missing vertices are named ``_<i>``.
    """
    declared: list[str] = []
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith(VERTEX_PRAGMA):
            declared.extend(line[len(VERTEX_PRAGMA):].split())
            continue
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise HypergraphError("missing 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError:
        raise HypergraphError("header must be two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise HypergraphError(f"header announces {m} hyperedges, found {len(body)}")
    for i, row in enumerate(body):
        if len(set(row)) != len(row):
            raise HypergraphError(f"hyperedge {i} repeats a vertex")
    h = Hypergraph.from_named(body, declared)
    if h.n > n:
        raise HypergraphError(f"header announces {n} vertices, found {h.n}")
    names = list(h.names)
    k = 0
    while len(names) < n:
        candidate = f"_{k}"
        k += 1
        if candidate not in names:
            names.append(candidate)
    return Hypergraph(n, h.edges, tuple(names))


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m}", VERTEX_PRAGMA + " " + " ".join(h.names)]
    for e in h.edges:
        lines.append(" ".join(h.names[v] for v in sorted(e)))
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, h: Hypergraph) -> Orientation:
    heads = [
        h.index(line.strip())
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    return check_orientation(h, heads)


def format_orientation(h: Hypergraph, heads: Sequence[int]) -> str:
    return "".join(h.names[x] + "\n" for x in heads)
