"""Oracle-equivalence suites shared by the ``selftest`` command and the test suite.

Each suite draws its instances from a seeded ``random.Random`` and returns a
``CheckResult``; a suite never raises on disagreement, it records it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations

from .connectivity import (
    lambda_dyper,
    lambda_dyper_brute,
    lambda_hyper,
    lambda_hyper_brute,
    reachable,
)
from .generators import (
    all_small_3cnf,
    odd_parity_formula,
    random_b2sat,
    random_hypergraph,
    random_orientation,
    unsat_3cnf,
)
from .hypercore import Dypergraph, digraph_expansion, orient
from .orient import (
    SrcohInstance,
    is_well_balanced,
    reorient_to_head,
    rooted_connected,
    solve_srcoh,
    srcoh_oracle,
    sscoh_exhaustive,
)
from .reductions import (
    assignment_to_hypertree,
    assignment_to_orientation,
    b2sat_to_wboh,
    hypertree_to_assignment,
    orientation_to_assignment,
    sat_to_sht,
    srcoh_to_sscoh,
)
from .satkit import brute_solve, evaluate
from .steiner import (
    enumerate_small_trees,
    labelled_trees,
    sht_oracle,
    solve_sht,
    verify_sht_certificate,
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name}: {self.cases} cases, {self.seconds:.1f}s{extra}"


class _timed:
    def __init__(self, result: CheckResult):
        self.result = result

    def __enter__(self):
        self.start = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        self.result.seconds = time.perf_counter() - self.start
        return False


def connectivity_agreement(rng: random.Random, instances: int = 200, orientations: int = 5) -> CheckResult:
    """Flow lambda against brute-force cuts, hypergraphs and their random orientations."""
    res = CheckResult("connectivity flow = brute force")
    with _timed(res):
        for _ in range(instances):
            h = random_hypergraph(rng, rng.randint(2, 9), rng.randint(1, 7))
            dyps = [orient(h, random_orientation(rng, h)) for _ in range(orientations)]
            for u, v in permutations(range(h.n), 2):
                res.cases += 1
                if lambda_hyper(h, u, v) != lambda_hyper_brute(h, u, v):
                    res.fail(f"lambda_hyper {h.edges} ({u},{v})")
                for d in dyps:
                    if lambda_dyper(d, u, v) != lambda_dyper_brute(d, u, v):
                        res.fail(f"lambda_dyper {d.arcs} ({u},{v})")
    return res


def expansion_agreement(rng: random.Random, instances: int = 200, orientations: int = 5) -> CheckResult:
    """Unit-flow value on the digraph expansion against dyperedge-cut enumeration."""
    res = CheckResult("digraph expansion lambda = dyperedge cut")
    with _timed(res):
        for _ in range(instances):
            h = random_hypergraph(rng, rng.randint(2, 9), rng.randint(1, 7))
            for _ in range(orientations):
                d = orient(h, random_orientation(rng, h))
                g = digraph_expansion(d)
                # the expansion as a dypergraph of singleton tails
                as_dyper = Dypergraph(g.num_nodes, tuple((frozenset([a]), b) for a, b in g.arcs))
                for u, v in permutations(range(h.n), 2):
                    res.cases += 1
                    flow = lambda_dyper(d, u, v)
                    if flow != lambda_dyper_brute(d, u, v):
                        res.fail(f"{d.arcs} ({u},{v}) flow={flow}")
                    elif g.num_nodes <= 12 and lambda_dyper_brute(as_dyper, u, v) != flow:
                        res.fail(f"expansion cut differs on {d.arcs} ({u},{v})")
    return res


def sht_agreement(rng: random.Random, instances: int = 300) -> CheckResult:
    res = CheckResult("fixed-terminal SHT = exhaustive oracle")
    with _timed(res):
        for _ in range(instances):
            n = rng.randint(4, 9)
            h = random_hypergraph(rng, n, rng.randint(1, 7))
            s = rng.sample(range(n), rng.choice((2, 3, 4)))
            got, want = solve_sht(h, s), sht_oracle(h, s)
            res.cases += 1
            if (got is None) != (want is None):
                res.fail(f"{h.edges} S={s}: solver={got} oracle={want}")
            for cert in (got, want):
                if cert is not None and not verify_sht_certificate(h, s, cert):
                    res.fail(f"bad certificate {cert} for {h.edges} S={s}")
    return res


def small_tree_counts(max_labels: int = 7, max_terminals: int = 5) -> CheckResult:
    res = CheckResult("Cayley counts and leaf/branch inequality")
    with _timed(res):
        for j in range(2, max_labels + 1):
            res.cases += 1
            count = sum(1 for _ in labelled_trees(range(j)))
            if count != j ** (j - 2):
                res.fail(f"{count} labelled trees on {j} labels")
        for k in range(2, max_terminals + 1):
            seen = set()
            for t in enumerate_small_trees(range(k)):
                res.cases += 1
                tree = t.tree
                degrees = [tree.degree(x) for x in tree.labels]
                leaves = sum(1 for d in degrees if d == 1)
                branching = sum(1 for d in degrees if d >= 3)
                if leaves < branching + 2:
                    res.fail(f"leaf/branch inequality fails on {tree}")
                if len(tree.labels) > 2 * k - 2:
                    res.fail(f"tree on {len(tree.labels)} labels is not small")
                if tree in seen:
                    res.fail(f"duplicate tree {tree}")
                seen.add(tree)
            if len(seen) > (2 * k - 2) ** (2 * k - 3):
                res.fail(f"{len(seen)} small trees for k={k} exceeds the bound")
    return res


def sat_sht_roundtrip(max_clauses: int = 4) -> CheckResult:
    res = CheckResult("3SAT <-> SHT round trip")
    with _timed(res):
        for f in all_small_3cnf(max_clauses) + [unsat_3cnf()]:
            res.cases += 1
            rm = sat_to_sht(f)
            phi = brute_solve(f)
            cert = sht_oracle(rm.h, rm.terminals)
            if (phi is None) != (cert is None):
                res.fail(f"{f.clauses}: sat={phi is not None} sht={cert is not None}")
                continue
            if phi is None:
                continue
            forward = assignment_to_hypertree(rm, phi)
            if not verify_sht_certificate(rm.h, rm.terminals, forward):
                res.fail(f"{f.clauses}: forward certificate invalid")
            for c in (forward, cert):
                back = hypertree_to_assignment(rm, c)
                if not evaluate(f, back):
                    res.fail(f"{f.clauses}: recovered assignment {back} unsatisfying")
    return res


def _random_srcoh(rng: random.Random) -> SrcohInstance:
    n = rng.randint(3, 8)
    h = random_hypergraph(rng, n, rng.randint(1, 6))
    r = rng.randrange(n)
    s = rng.sample([v for v in range(n) if v != r], rng.randint(1, min(3, n - 1)))
    return SrcohInstance(h, r, frozenset(s))


def srcoh_agreement(rng: random.Random, instances: int = 200) -> CheckResult:
    res = CheckResult("SRCOH oracle = SHT oracle = fixed-terminal SRCOH")
    with _timed(res):
        for _ in range(instances):
            inst = _random_srcoh(rng)
            res.cases += 1
            a = srcoh_oracle(inst)
            b = sht_oracle(inst.h, inst.s | {inst.r})
            c = solve_srcoh(inst)
            if len({a is None, b is None, c is None}) > 1:
                res.fail(f"{inst}: oracle={a} sht={b} solver={c}")
            elif c is not None and not rooted_connected(inst.h, c, inst.r, inst.s):
                res.fail(f"{inst}: returned orientation misses a terminal")
    return res


def sscoh_reduction_agreement(rng: random.Random, instances: int = 100) -> CheckResult:
    res = CheckResult("SRCOH <-> SSCOH reduction")
    with _timed(res):
        for _ in range(instances):
            inst = _random_srcoh(rng)
            h2, s2 = srcoh_to_sscoh(inst)
            res.cases += 1
            if (srcoh_oracle(inst) is None) != (sscoh_exhaustive(h2, s2) is None):
                res.fail(f"{inst}")
    return res


def _b2sat_instances(rng: random.Random, count: int, satisfiable_only: bool):
    out = [odd_parity_formula()]
    seen = {out[0].clauses}
    while len(out) < count:
        f = random_b2sat(rng, rng.choice((3, 3, 3, 6)))
        if f.clauses in seen or (satisfiable_only and brute_solve(f) is None):
            continue
        seen.add(f.clauses)
        out.append(f)
    return out


def gadget_connectivity(rng: random.Random, instances: int = 20) -> CheckResult:
    res = CheckResult("lambda(a, z_C) = 8 on (3,B2) gadgets")
    with _timed(res):
        for f in _b2sat_instances(rng, instances, satisfiable_only=False):
            rm = b2sat_to_wboh(f)
            nv, nc = f.num_vars, len(f.clauses)
            if rm.h.n != 12 * nv + nc + 1 or rm.h.m != 12 * nv + 4 * nc + 3 * nv + 4:
                res.fail(f"{f.clauses}: size n={rm.h.n} m={rm.h.m}")
            for z in rm.z:
                res.cases += 1
                if lambda_hyper(rm.h, rm.a, z) != 8 or rm.h.degree(z) != 8:
                    res.fail(f"{f.clauses}: lambda(a, {rm.h.names[z]}) != 8")
    return res


def wboh_roundtrip(rng: random.Random, instances: int = 20) -> CheckResult:
    res = CheckResult("(3,B2)-SAT -> well-balanced orientation and back")
    with _timed(res):
        for f in _b2sat_instances(rng, instances, satisfiable_only=True):
            res.cases += 1
            rm = b2sat_to_wboh(f)
            o = assignment_to_orientation(rm, brute_solve(f))
            report = is_well_balanced(rm.h, o)
            if not report.verdict:
                res.fail(f"{f.clauses}: not well-balanced at {report.witness}")
                continue
            if not evaluate(f, orientation_to_assignment(rm, o)):
                res.fail(f"{f.clauses}: recovered assignment unsatisfying")
    return res


def reorientation_preserves(rng: random.Random, instances: int = 100) -> CheckResult:
    res = CheckResult("circuit reversal preserves every lambda")
    with _timed(res):
        while res.cases < instances:
            h = random_hypergraph(rng, rng.randint(3, 7), rng.randint(2, 7))
            o = random_orientation(rng, h)
            d = orient(h, o)
            e = rng.randrange(h.m)
            options = [x for x in h.edges[e] if x != o[e] and reachable(d, o[e], x)]
            if not options:
                continue
            x = rng.choice(options)
            res.cases += 1
            new = reorient_to_head(h, o, e, x)
            d2 = orient(h, new)
            if new[e] != x:
                res.fail(f"{h.edges} {o}: head of {e} is {new[e]}, wanted {x}")
            for u, v in permutations(range(h.n), 2):
                if lambda_dyper_brute(d, u, v) != lambda_dyper_brute(d2, u, v):
                    res.fail(f"{h.edges} {o} e={e} x={x}: lambda({u},{v}) changed")
                    break
    return res


def desk_suite(seed: int = 0, scale: float = 0.25) -> list[CheckResult]:
    """Everything above at a reduced, quick scale."""
    rng = random.Random(seed)
    k = lambda n: max(1, int(n * scale))
    return [
        connectivity_agreement(rng, k(200), 2),
        expansion_agreement(rng, k(200), 2),
        small_tree_counts(6, 4),
        sht_agreement(rng, k(300)),
        sat_sht_roundtrip(2),
        srcoh_agreement(rng, k(200)),
        sscoh_reduction_agreement(rng, k(100)),
        gadget_connectivity(rng, k(20)),
        wboh_roundtrip(rng, k(20)),
        reorientation_preserves(rng, k(100)),
    ]
