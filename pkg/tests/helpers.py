from hypersteiner.hypercore import Hypergraph


def H(*edges, vertices=()):
    """Hypergraph from strings like "abc" (single-letter vertex names)."""
    return Hypergraph.from_named([list(e) for e in edges], list(vertices))
