"""Small CNF toolbox: DIMACS I/O, brute-force satisfiability, (3,B2) checks.

Literals use the DIMACS convention: variable ``i`` (1-based) is ``i`` and its
negation ``-i``. Assignments are tuples of bools indexed by ``i - 1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

Assignment = tuple[bool, ...]

BRUTE_MAX_VARIABLES = 25


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range for {self.num_vars} variables")

    def occurrences(self) -> Counter:
        return Counter(lit for c in self.clauses for lit in c)


def literal_name(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"~x{-lit}"


def literal_value(phi: Assignment, lit: int) -> bool:
    value = phi[abs(lit) - 1]
    return value if lit > 0 else not value


def evaluate(f: CnfFormula, phi: Sequence[bool]) -> bool:
    if len(phi) != f.num_vars:
        raise CnfError(f"assignment covers {len(phi)} of {f.num_vars} variables")
    phi = tuple(bool(x) for x in phi)
    return all(any(literal_value(phi, lit) for lit in c) for c in f.clauses)


def brute_solve(f: CnfFormula) -> Assignment | None:
    """First satisfying assignment in lexicographic order (FALSE before TRUE)."""
    if f.num_vars > BRUTE_MAX_VARIABLES:
        raise CnfError(f"brute force limited to {BRUTE_MAX_VARIABLES} variables")
    for phi in product((False, True), repeat=f.num_vars):
        if evaluate(f, phi):
            return phi
    return None


def validate_3b2(f: CnfFormula) -> bool:
    """Every clause has 3 literals and each literal occurs exactly twice."""
    if any(len(c) != 3 for c in f.clauses):
        return False
    occ = f.occurrences()
    return all(occ[x] == 2 and occ[-x] == 2 for x in range(1, f.num_vars + 1))


def parse_dimacs(text: str, clause_size: int | None = 3) -> CnfFormula:
    """Parse ``p cnf V C`` plus zero-terminated clauses.

    With ``clause_size`` set, any clause of another length is rejected.
    """
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"bad header: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise CnfError("clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfError(f"bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise CnfError("missing 'p cnf' header")
    if len(clauses) != num_clauses:
        raise CnfError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    if clause_size is not None:
        for i, c in enumerate(clauses):
            if len(c) != clause_size:
                raise CnfError(f"clause {i + 1} has {len(c)} literals, expected {clause_size}")
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def format_assignment(phi: Sequence[bool]) -> str:
    return " ".join(str(i + 1) if v else str(-(i + 1)) for i, v in enumerate(phi))
