from itertools import product

import pytest

from hypersteiner.generators import two_clause_formula, odd_parity_formula, unsat_3cnf
from hypersteiner.satkit import (
    CnfError,
    CnfFormula,
    brute_solve,
    evaluate,
    format_dimacs,
    parse_dimacs,
    validate_3b2,
)


def test_brute_solve_two_clause():
    f = two_clause_formula()
    phi = brute_solve(f)
    assert phi is not None and evaluate(f, phi)
    # first satisfying assignment in FALSE-before-TRUE order
    assert phi == (False, False, True)


def test_brute_solve_unsat():
    assert brute_solve(unsat_3cnf()) is None


def test_brute_solve_empty_formula():
    assert brute_solve(CnfFormula(3)) == (False, False, False)


def test_evaluate():
    f = two_clause_formula()
    assert evaluate(f, (True, True, True))
    assert not evaluate(f, (False, False, False))
    assert evaluate(CnfFormula(0), ())
    with pytest.raises(CnfError):
        evaluate(f, (True,))


def test_brute_solve_matches_evaluation():
    for f in (two_clause_formula(), odd_parity_formula(), unsat_3cnf()):
        any_sat = any(evaluate(f, phi) for phi in product((False, True), repeat=f.num_vars))
        assert (brute_solve(f) is not None) == any_sat


def test_validate_3b2():
    assert validate_3b2(odd_parity_formula())
    assert not validate_3b2(two_clause_formula())
    assert validate_3b2(CnfFormula(0))
    assert not validate_3b2(CnfFormula(1))


def test_3b2_variables_fill_four_slots():
    f = odd_parity_formula()
    for x in range(1, f.num_vars + 1):
        assert sum(abs(l) == x for c in f.clauses for l in c) == 4


def test_dimacs_roundtrip():
    f = odd_parity_formula()
    assert parse_dimacs(format_dimacs(f)) == f


def test_dimacs_comments_and_multiline_clauses():
    text = "c hello\np cnf 3 2\n1 2\n3 0 -1 -2 -3 0\n"
    assert parse_dimacs(text).clauses == ((1, 2, 3), (-1, -2, -3))


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3 0\n",
        "p cnf 3 1\n1 2 0\n",
        "p cnf 3 2\n1 2 3 0\n",
        "p cnf 2 1\n1 2 3 0\n",
        "p cnf 3 1\n1 x 3 0\n",
    ],
)
def test_dimacs_errors(text):
    with pytest.raises(CnfError):
        parse_dimacs(text)


def test_dimacs_any_clause_size_when_asked():
    assert parse_dimacs("p cnf 2 1\n1 -2 0\n", clause_size=None).clauses == ((1, -2),)
