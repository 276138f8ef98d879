"""Hardness reductions and the certificate translations that go with them.

* 3SAT -> Steiner hypertree (``sat_to_sht``)
* rooted Steiner orientation -> strong Steiner orientation (``srcoh_to_sscoh``)
* (3,B2)-SAT -> well-balanced orientation (``b2sat_to_wboh``)

Vertex names: literal ``x1`` / ``~x1``, clause ``C1``; ``w<lit>``, ``z<clause>``,
``a`` for the Steiner gadget, plus ``v<lit>``, ``v<lit>@<clause>``,
``w<lit>@<clause>`` for the well-balanced gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hypercore import Hypergraph, HypergraphError, Orientation, check_orientation
from .orient import SrcohInstance, is_well_balanced, reorient_to_head
from .satkit import Assignment, CnfFormula, evaluate, literal_name, literal_value, validate_3b2
from .steiner import ShtCertificate, verify_sht_certificate


class InvalidFormulaError(HypergraphError):
    pass


class ConstructionError(HypergraphError):
    pass


class InvalidWitnessError(HypergraphError):
    pass


def clause_name(j: int) -> str:
    return f"C{j + 1}"


def _check_clauses(f: CnfFormula) -> None:
    for j, c in enumerate(f.clauses):
        if len(c) != 3:
            raise InvalidFormulaError(f"clause {clause_name(j)} has {len(c)} literals")
        if len({abs(lit) for lit in c}) != 3:
            raise InvalidFormulaError(
                f"clause {clause_name(j)} repeats a variable or contains a complementary pair"
            )


def _first_true(phi: Assignment, clause: Sequence[int], j: int) -> int:
    for lit in clause:
        if literal_value(phi, lit):
            return lit
    raise ConstructionError(f"assignment leaves clause {clause_name(j)} unsatisfied")


def _name_map_lines(rows) -> str:
    return "".join(f"{name} {kind} {base}\n" for name, kind, base in rows)


# --- 3SAT -> SHT ------------------------------------------------------------

@dataclass(frozen=True)
class ShtReductionMap:
    formula: CnfFormula
    h: Hypergraph
    terminals: frozenset[int]
    a: int
    w: dict[int, int]          # literal -> vertex
    z: tuple[int, ...]         # clause -> vertex
    e_var: tuple[int, ...]     # variable (0-based) -> hyperedge index
    e_clause: tuple[int, ...]  # clause -> hyperedge index

    def name_map(self) -> str:
        rows = [(self.h.names[self.w[lit]], "w", literal_name(lit)) for lit in sorted(self.w, key=lambda l: (abs(l), l < 0))]
        rows += [(self.h.names[z], "z", clause_name(j)) for j, z in enumerate(self.z)]
        rows.append((self.h.names[self.a], "a", "-"))
        return _name_map_lines(rows)


def sat_to_sht(f: CnfFormula) -> ShtReductionMap:
    _check_clauses(f)
    names: list[str] = []
    w = {}
    for x in range(1, f.num_vars + 1):
        for lit in (x, -x):
            w[lit] = len(names)
            names.append("w" + literal_name(lit))
    z = []
    for j in range(len(f.clauses)):
        z.append(len(names))
        names.append("z" + clause_name(j))
    a = len(names)
    names.append("a")
    edges = [frozenset((a, w[x], w[-x])) for x in range(1, f.num_vars + 1)]
    edges += [frozenset([w[lit] for lit in c] + [z[j]]) for j, c in enumerate(f.clauses)]
    h = Hypergraph(len(names), tuple(edges), tuple(names))
    nv = f.num_vars
    return ShtReductionMap(
        f, h, frozenset(z) | {a}, a, w, tuple(z),
        tuple(range(nv)), tuple(range(nv, nv + len(f.clauses))),
    )


def assignment_to_hypertree(rm: ShtReductionMap, phi: Sequence[bool]) -> ShtCertificate:
    phi = tuple(phi)
    choice = {}
    for x in range(1, rm.formula.num_vars + 1):
        choice[rm.e_var[x - 1]] = (rm.a, rm.w[x] if phi[x - 1] else rm.w[-x])
    for j, c in enumerate(rm.formula.clauses):
        lit = _first_true(phi, c, j)
        choice[rm.e_clause[j]] = (rm.w[lit], rm.z[j])
    return ShtCertificate(choice)


def hypertree_to_assignment(rm: ShtReductionMap, cert: ShtCertificate) -> Assignment:
    if not verify_sht_certificate(rm.h, rm.terminals, cert):
        raise InvalidWitnessError("certificate is not a Steiner tree on the clause terminals")
    phi = []
    for x in range(1, rm.formula.num_vars + 1):
        pair = cert.choice.get(rm.e_var[x - 1])
        phi.append(pair is not None and set(pair) == {rm.a, rm.w[x]})
    return tuple(phi)


# --- SRCOH -> SSCOH ---------------------------------------------------------

def srcoh_to_sscoh(inst: SrcohInstance) -> tuple[Hypergraph, frozenset[int]]:
    star = inst.s | {inst.r}
    if len(star) < 2:
        raise InvalidFormulaError("root plus terminals must span at least two vertices")
    return inst.h.with_edges([star]), frozenset(star)


# --- (3,B2)-SAT -> WBOH ------------------------------------------------------

@dataclass(frozen=True)
class WbohReductionMap:
    formula: CnfFormula
    h: Hypergraph
    a: int
    z: tuple[int, ...]
    v: dict[int, int]                   # literal -> v_l
    w: dict[int, int]                   # literal -> w_l
    v_at: dict[tuple[int, int], int]    # (literal, clause) -> v_l^C
    w_at: dict[tuple[int, int], int]    # (literal, clause) -> w_l^C
    clauses_of: dict[int, tuple[int, int]]  # literal -> (C1, C2) in clause-list order
    cycle: dict[int, tuple[int, ...]]   # literal -> its six gadget edge indices, in cycle order
    clause_edges: dict[int, tuple[int, ...]]  # clause -> three v^C z edges
    clause_hyperedge: tuple[int, ...]
    a_edge: dict[int, int]              # literal -> edge a v_l
    var_hyperedge: tuple[int, ...]      # variable (0-based) -> {a, w_x, w_~x}
    stars: tuple[int, ...]              # the four copies of Z + a

    def name_map(self) -> str:
        names = self.h.names
        rows = []
        for lit in self._literals():
            ln = literal_name(lit)
            rows.append((names[self.v[lit]], "v", ln))
            rows.append((names[self.w[lit]], "w", ln))
            for j in self.clauses_of[lit]:
                rows.append((names[self.v_at[lit, j]], "vc", f"{ln}@{clause_name(j)}"))
                rows.append((names[self.w_at[lit, j]], "wc", f"{ln}@{clause_name(j)}"))
        rows += [(names[z], "z", clause_name(j)) for j, z in enumerate(self.z)]
        rows.append((names[self.a], "a", "-"))
        return _name_map_lines(rows)

    def _literals(self):
        return [lit for x in range(1, self.formula.num_vars + 1) for lit in (x, -x)]


def b2sat_to_wboh(f: CnfFormula) -> WbohReductionMap:
    if not validate_3b2(f):
        raise InvalidFormulaError("formula is not a (3,B2)-SAT instance")
    _check_clauses(f)
    names: list[str] = []

    def vertex(name):
        names.append(name)
        return len(names) - 1

    literals = [lit for x in range(1, f.num_vars + 1) for lit in (x, -x)]
    clauses_of = {
        lit: tuple(j for j, c in enumerate(f.clauses) if lit in c) for lit in literals
    }
    v, w, v_at, w_at = {}, {}, {}, {}
    for lit in literals:
        ln = literal_name(lit)
        v[lit] = vertex("v" + ln)
        w[lit] = vertex("w" + ln)
        for j in clauses_of[lit]:
            v_at[lit, j] = vertex(f"v{ln}@{clause_name(j)}")
            w_at[lit, j] = vertex(f"w{ln}@{clause_name(j)}")
    z = tuple(vertex("z" + clause_name(j)) for j in range(len(f.clauses)))
    a = vertex("a")

    edges: list[frozenset[int]] = []

    def edge(*members):
        edges.append(frozenset(members))
        return len(edges) - 1

    cycle = {}
    for lit in literals:
        c1, c2 = clauses_of[lit]
        ring = [v[lit], v_at[lit, c1], w_at[lit, c1], w[lit], w_at[lit, c2], v_at[lit, c2]]
        cycle[lit] = tuple(edge(ring[i], ring[(i + 1) % 6]) for i in range(6))
    clause_edges, clause_hyperedge = {}, []
    for j, c in enumerate(f.clauses):
        clause_edges[j] = tuple(edge(v_at[lit, j], z[j]) for lit in c)
        clause_hyperedge.append(edge(*(w_at[lit, j] for lit in c), z[j]))
    a_edge = {lit: edge(a, v[lit]) for lit in literals}
    var_hyperedge = tuple(edge(a, w[x], w[-x]) for x in range(1, f.num_vars + 1))
    stars = tuple(edge(*z, a) for _ in range(4))

    h = Hypergraph(len(names), tuple(edges), tuple(names))
    return WbohReductionMap(
        f, h, a, z, v, w, v_at, w_at, clauses_of, cycle, clause_edges,
        tuple(clause_hyperedge), a_edge, var_hyperedge, stars,
    )


def assignment_to_orientation(rm: WbohReductionMap, phi: Sequence[bool]) -> Orientation:
    phi = tuple(phi)
    f = rm.formula
    if not evaluate(f, phi):
        raise ConstructionError("assignment does not satisfy the formula")
    heads = [-1] * rm.h.m
    for i in rm.stars:
        heads[i] = rm.a
    for j in range(len(f.clauses)):
        heads[rm.clause_hyperedge[j]] = rm.z[j]
        for i in rm.clause_edges[j]:
            heads[i] = rm.z[j]
    for lit in rm._literals():
        heads[rm.a_edge[lit]] = rm.v[lit]
        c1, c2 = rm.clauses_of[lit]
        ring = rm.cycle[lit]
        if literal_value(phi, lit):
            # ring order: v v^C1 w^C1 w w^C2 v^C2
            heads[ring[0]] = rm.v_at[lit, c1]
            heads[ring[1]] = rm.w_at[lit, c1]
            heads[ring[2]] = rm.w_at[lit, c1]
            heads[ring[3]] = rm.w_at[lit, c2]
            heads[ring[4]] = rm.w_at[lit, c2]
            heads[ring[5]] = rm.v_at[lit, c2]
        else:
            seq = [rm.v[lit], rm.v_at[lit, c1], rm.w_at[lit, c1], rm.w[lit],
                   rm.w_at[lit, c2], rm.v_at[lit, c2]]
            for k in range(6):
                heads[ring[k]] = seq[(k + 1) % 6]
    for x in range(1, f.num_vars + 1):
        heads[rm.var_hyperedge[x - 1]] = rm.w[x] if phi[x - 1] else rm.w[-x]
    return check_orientation(rm.h, heads)


def orientation_to_assignment(rm: WbohReductionMap, heads: Sequence[int]) -> Assignment:
    """Read a truth assignment off a well-balanced orientation of the gadget.

    Each copy of ``Z + a`` is first re-headed at ``a`` by circuit reversal
    (kept clear of the other copies), which leaves every connectivity value
    unchanged.
    """
    heads = check_orientation(rm.h, heads)
    if not is_well_balanced(rm.h, heads).verdict:
        raise InvalidWitnessError("orientation is not well-balanced")
    for i in rm.stars:
        others = [k for k in rm.stars if k != i]
        heads = reorient_to_head(rm.h, heads, i, rm.a, avoid=others)
    return tuple(
        heads[rm.var_hyperedge[x - 1]] == rm.w[x] for x in range(1, rm.formula.num_vars + 1)
    )
