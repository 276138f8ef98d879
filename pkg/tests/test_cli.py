import pytest

from hypersteiner.cli import ERROR, NO, YES, main
from hypersteiner.generators import two_clause_formula, odd_parity_formula, unsat_3cnf
from hypersteiner.reductions import assignment_to_orientation, b2sat_to_wboh
from hypersteiner.hypercore import format_orientation
from hypersteiner.satkit import format_dimacs


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    write.dir = tmp_path
    return write


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sht_yes_and_no(files, capsys):
    yes = files("yes.hg", "3 2\nr s t\nr s t\n")
    code, out, _ = run(capsys, "sht", "--hypergraph", yes, "--terminals", "r s t")
    assert code == YES and out.startswith("engine: fixed-terminal\n") and "YES" in out
    no = files("no.hg", "3 1\nr s t\n")
    code, out, _ = run(capsys, "sht", "--hypergraph", no, "--terminals", "r s t", "--oracle")
    assert code == NO and "engine: oracle" in out


def test_sat_pipeline_through_sht(files, capsys):
    cnf = files("f.cnf", format_dimacs(two_clause_formula()))
    d = files.dir
    code, out, _ = run(
        capsys, "reduce", "--kind", "sat2sht", "--input", cnf,
        "--output", d / "f.hg", "--map", d / "f.map",
    )
    assert code == YES and out == "# terminals: zC1 zC2 a\n"
    code, _, _ = run(
        capsys, "sht", "--hypergraph", d / "f.hg", "--terminals", "zC1 zC2 a",
        "--certificate", d / "f.cert",
    )
    assert code == YES
    code, out, _ = run(
        capsys, "verify", "--hypergraph", d / "f.hg", "--terminals", "zC1 zC2 a",
        "--certificate", d / "f.cert", "--cnf", cnf, "--map", d / "f.map",
    )
    assert code == YES and "assignment: " in out


def test_unsat_reduction_hands_over_to_oracle(files, capsys):
    cnf = files("u.cnf", format_dimacs(unsat_3cnf()))
    d = files.dir
    run(capsys, "reduce", "--kind", "sat2sht", "--input", cnf, "--output", d / "u.hg")
    terminals = "a " + " ".join(f"zC{j}" for j in range(1, 9))
    code, out, _ = run(capsys, "sht", "--hypergraph", d / "u.hg", "--terminals", terminals)
    assert code == NO and "engine: oracle" in out


def test_srcoh_and_sscoh(files, capsys):
    hg = files("p.hg", "3 2\nr s\ns t\n")
    d = files.dir
    code, _, _ = run(
        capsys, "srcoh", "--hypergraph", hg, "--root", "r", "--terminals", "t",
        "--certificate", d / "p.or",
    )
    assert code == YES and (d / "p.or").read_text() == "s\nt\n"
    code, _, _ = run(capsys, "verify", "--hypergraph", hg, "--orientation", d / "p.or", "--root", "r", "--terminals", "t")
    assert code == YES
    code, _, _ = run(capsys, "verify", "--hypergraph", hg, "--orientation", d / "p.or", "--terminals", "r t")
    assert code == NO
    code, _, _ = run(capsys, "sscoh", "--hypergraph", hg, "--terminals", "r t")
    assert code == NO
    code, out, _ = run(
        capsys, "reduce", "--kind", "srcoh2sscoh", "--input", hg, "--root", "r",
        "--terminals", "t", "--map", d / "p.map",
    )
    assert code == YES and out.splitlines()[2:5] == ["r s", "s t", "r t"]
    assert (d / "p.map").read_text() == "r root -\nt terminal -\n"
    code, _, _ = run(capsys, "reduce", "--kind", "srcoh2sscoh", "--input", hg)
    assert code == ERROR


def test_wbo_check_and_solve(files, capsys):
    tri = files("tri.hg", "3 3\na b\nb c\nc a\n")
    good = files("good.or", "b\nc\na\n")
    bad = files("bad.or", "a\nb\na\n")
    assert run(capsys, "wbo-check", "--hypergraph", tri, "--orientation", good)[0] == YES
    code, out, _ = run(capsys, "wbo-check", "--hypergraph", tri, "--orientation", bad)
    assert code == NO and "violated at" in out
    assert run(capsys, "verify", "--hypergraph", tri, "--orientation", good)[0] == YES
    code, _, _ = run(capsys, "wbo-solve", "--hypergraph", tri, "--certificate", files.dir / "t.or")
    assert code == YES and (files.dir / "t.or").exists()
    par = files("par.hg", "3 2\na b c\na b c\n")
    assert run(capsys, "wbo-solve", "--hypergraph", par)[0] == NO


def test_wboh_translation(files, capsys):
    f = odd_parity_formula()
    cnf = files("g.cnf", format_dimacs(f))
    d = files.dir
    run(capsys, "reduce", "--kind", "b2sat2wboh", "--input", cnf, "--output", d / "g.hg", "--map", d / "g.map")
    rm = b2sat_to_wboh(f)
    orient_file = files("g.or", format_orientation(rm.h, assignment_to_orientation(rm, (True, True, True))))
    code, out, _ = run(
        capsys, "verify", "--hypergraph", d / "g.hg", "--orientation", orient_file,
        "--cnf", cnf, "--map", d / "g.map",
    )
    assert code == YES and "assignment: 1 2 3" in out
    unbalanced = files("u.or", "".join(rm.h.names[min(e)] + "\n" for e in rm.h.edges))
    code, out, _ = run(
        capsys, "verify", "--hypergraph", d / "g.hg", "--orientation", unbalanced,
        "--cnf", cnf, "--map", d / "g.map",
    )
    assert code == NO and "invalid witness" in out


def test_lambda(files, capsys):
    hg = files("l.hg", "3 2\na b c\na b c\n")
    assert run(capsys, "lambda", "--hypergraph", hg, "a", "b") == (YES, "2\n", "")
    assert run(capsys, "lambda", "--hypergraph", hg, "a", "b", "--oracle")[1] == "2\n"
    o = files("l.or", "b\nc\n")
    assert run(capsys, "lambda", "--hypergraph", hg, "a", "b", "--orientation", o)[1] == "1\n"
    assert run(capsys, "lambda", "--hypergraph", hg, "a", "a")[0] == ERROR


def test_errors(files, capsys):
    assert run(capsys, "sht", "--hypergraph", "/nonexistent", "--terminals", "a")[0] == ERROR
    assert run(capsys, "bogus")[0] == ERROR
    assert run(capsys, "--help")[0] == YES
    hg = files("e.hg", "2 1\na b\n")
    code, _, err = run(capsys, "sht", "--hypergraph", hg, "--terminals", "a q")
    assert code == ERROR and err.startswith("error:")
    assert run(capsys, "verify", "--hypergraph", hg)[0] == ERROR
    cnf = files("c.cnf", "p cnf 3 1\n1 2 3 0\n")
    assert run(capsys, "verify", "--hypergraph", hg, "--orientation", hg, "--cnf", cnf)[0] == ERROR
    bad_cnf = files("b.cnf", "p cnf 3 1\n1 2 0\n")
    assert run(capsys, "reduce", "--kind", "sat2sht", "--input", bad_cnf)[0] == ERROR
    big = files("big.hg", "4 10\n" + "a b c d\n" * 10)
    assert run(capsys, "wbo-solve", "--hypergraph", big)[0] == ERROR


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--scale", "0.05")
    assert code == YES
    lines = out.splitlines()
    assert lines[-1] == "YES"
    assert all(line.startswith("[PASS]") for line in lines[:-1])
