"""Random and fixed instances for oracle cross-checks."""

from __future__ import annotations

import random
from itertools import combinations, product

from .hypercore import Hypergraph
from .satkit import CnfFormula


def random_hypergraph(rng: random.Random, n: int, m: int, sizes=(2, 4)) -> Hypergraph:
    lo, hi = sizes
    hi = min(hi, n)
    edges = [frozenset(rng.sample(range(n), rng.randint(lo, hi))) for _ in range(m)]
    return Hypergraph(n, tuple(edges))


def random_orientation(rng: random.Random, h: Hypergraph) -> tuple[int, ...]:
    return tuple(rng.choice(sorted(e)) for e in h.edges)


def full_clauses(num_vars: int = 3) -> list[tuple[int, ...]]:
    """Every clause over variables 1..num_vars using each variable once (num_vars == 3)."""
    return [
        tuple(x if sign else -x for x, sign in zip(range(1, num_vars + 1), signs))
        for signs in product((True, False), repeat=num_vars)
    ]


def all_small_3cnf(max_clauses: int = 4) -> list[CnfFormula]:
    """All sets of at most ``max_clauses`` distinct-variable clauses over x1..x3."""
    pool = full_clauses(3)
    return [
        CnfFormula(3, chosen)
        for k in range(max_clauses + 1)
        for chosen in combinations(pool, k)
    ]


def unsat_3cnf() -> CnfFormula:
    return CnfFormula(3, tuple(full_clauses(3)))


def two_clause_formula() -> CnfFormula:
    return CnfFormula(3, ((1, 2, 3), (1, -2, -3)))


def odd_parity_formula() -> CnfFormula:
    return CnfFormula(3, ((1, 2, 3), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)))


def random_3cnf(rng: random.Random, num_vars: int, num_clauses: int) -> CnfFormula:
    clauses = []
    for _ in range(num_clauses):
        xs = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(tuple(x if rng.random() < 0.5 else -x for x in xs))
    return CnfFormula(num_vars, tuple(clauses))


def random_b2sat(rng: random.Random, num_vars: int, attempts: int = 10_000) -> CnfFormula:
    """Random (3,B2) instance: every literal exactly twice, three distinct variables per clause."""
    if num_vars % 3:
        raise ValueError("(3,B2) instances need a multiple of 3 variables")
    slots = [lit for x in range(1, num_vars + 1) for lit in (x, x, -x, -x)]
    for _ in range(attempts):
        rng.shuffle(slots)
        clauses = [tuple(slots[i:i + 3]) for i in range(0, len(slots), 3)]
        if all(len({abs(l) for l in c}) == 3 for c in clauses):
            return CnfFormula(num_vars, tuple(clauses))
    raise RuntimeError("could not place literals into distinct-variable clauses")
