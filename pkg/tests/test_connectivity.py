import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from helpers import H
from hypersteiner.connectivity import (
    InvalidQueryError,
    lambda_dyper,
    lambda_dyper_brute,
    lambda_hyper,
    lambda_hyper_brute,
    reachable,
    strongly_connected_in,
)
from hypersteiner.generators import random_hypergraph, random_orientation
from hypersteiner.hypercore import Dypergraph, Hypergraph, OracleScaleError, orient


def test_single_hyperedge():
    h = H("abc")
    assert lambda_hyper(h, 0, 1) == 1 == lambda_hyper_brute(h, 0, 1)


def test_parallel_hyperedges():
    h = H("abc", "abc")
    # value frozen from the cut enumeration
    assert lambda_hyper_brute(h, 0, 1) == 2
    assert lambda_hyper(h, 0, 1) == 2


def test_single_dyperedge():
    d = Dypergraph(3, (({0, 1}, 2),))
    assert lambda_dyper(d, 0, 2) == 1 == lambda_dyper_brute(d, 0, 2)
    assert lambda_dyper(d, 2, 0) == 0 == lambda_dyper_brute(d, 2, 0)


def test_parallel_oriented_to_different_heads():
    h = H("abc", "abc")
    a, b, c = (h.index(x) for x in "abc")
    d = orient(h, [b, c])
    assert lambda_dyper_brute(d, a, b) == 1
    assert lambda_dyper(d, a, b) == 1


def test_directed_circuit_all_pairs_one():
    d = Dypergraph(3, (({0}, 1), ({1}, 2), ({2}, 0)))
    for u, v in permutations(range(3), 2):
        assert lambda_dyper_brute(d, u, v) == 1
        assert lambda_dyper(d, u, v) == 1


def test_same_endpoint_rejected():
    with pytest.raises(InvalidQueryError):
        lambda_hyper(H("ab"), 0, 0)
    with pytest.raises(InvalidQueryError):
        lambda_dyper_brute(Dypergraph(2, (({0}, 1),)), 1, 1)


def test_brute_force_scale_guard():
    big = Hypergraph(21, ({0, 1},))
    with pytest.raises(OracleScaleError):
        lambda_hyper_brute(big, 0, 1)


def test_limit_stops_early():
    h = H("ab", "ab", "ab")
    assert lambda_hyper(h, 0, 1) == 3
    assert lambda_hyper(h, 0, 1, limit=2) == 2


def test_reachability_examples():
    d = Dypergraph(3, (({0, 1}, 2),))
    assert reachable(d, 0, 2)
    assert not reachable(d, 2, 0)
    assert reachable(d, 2, 2)
    chain = Dypergraph(4, (({0}, 1), ({1, 2}, 3)))
    assert reachable(chain, 0, 3)


def test_strongly_connected_in():
    circuit = Dypergraph(3, (({0}, 1), ({1}, 2), ({2}, 0)))
    assert strongly_connected_in(circuit, {0, 1, 2})
    single = Dypergraph(3, (({0, 1}, 2),))
    assert not strongly_connected_in(single, {0, 2})
    assert strongly_connected_in(single, {1})
    assert strongly_connected_in(single, set())


def test_flow_matches_brute_force_on_random_instances():
    rng = random.Random(7)
    for _ in range(60):
        h = random_hypergraph(rng, rng.randint(2, 8), rng.randint(0, 6))
        d = orient(h, random_orientation(rng, h))
        for u, v in permutations(range(h.n), 2):
            assert lambda_hyper(h, u, v) == lambda_hyper_brute(h, u, v)
            assert lambda_dyper(d, u, v) == lambda_dyper_brute(d, u, v)


@st.composite
def hypergraph_and_pair(draw):
    n = draw(st.integers(2, 7))
    edges = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=4), max_size=6))
    u, v = draw(st.permutations(range(n)))[:2]
    return Hypergraph(n, tuple(edges)), u, v


@settings(max_examples=80)
@given(hypergraph_and_pair(), st.sets(st.integers(0, 6), min_size=2, max_size=4))
def test_symmetry_and_monotonicity(case, extra):
    h, u, v = case
    assert lambda_hyper(h, u, v) == lambda_hyper(h, v, u)
    extra = {x % h.n for x in extra}
    if len(extra) >= 2:
        assert lambda_hyper(h.with_edges([extra]), u, v) >= lambda_hyper(h, u, v)


def test_reachability_reflexive_transitive():
    rng = random.Random(3)
    for _ in range(30):
        h = random_hypergraph(rng, 6, 5)
        d = orient(h, random_orientation(rng, h))
        reach = {(u, v) for u in range(6) for v in range(6) if reachable(d, u, v)}
        assert all((u, u) in reach for u in range(6))
        for u, v in reach:
            for w in range(6):
                if (v, w) in reach:
                    assert (u, w) in reach
