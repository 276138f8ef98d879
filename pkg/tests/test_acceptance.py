"""Acceptance criteria, one test each.

Every test logs a single ``[PASS]`` or ``[FAIL]`` line; the lines are printed
together in the "acceptance criteria" section of the pytest summary.
"""

import random
import time

from helpers import H
from hypersteiner import checks
from hypersteiner.generators import odd_parity_formula
from hypersteiner.hypercore import orient
from hypersteiner.connectivity import strongly_connected_in
from hypersteiner.orient import wboh_exhaustive
from hypersteiner.reductions import b2sat_to_wboh


def _run(log, tag, result, *, min_cases, budget=None):
    ok = result.passed and result.cases >= min_cases
    if budget is not None:
        ok = ok and result.seconds < budget
    status = "PASS" if ok else "FAIL"
    log.append(f"[{status}] {tag} {result.name}: {result.cases} cases, {result.seconds:.1f}s")
    assert result.failures == [], result.failures[:5]
    assert result.cases >= min_cases
    if budget is not None:
        assert result.seconds < budget


def test_ac01_connectivity(acceptance_log):
    res = checks.connectivity_agreement(random.Random(101), 200, 5)
    _run(acceptance_log, "AC01", res, min_cases=200, budget=60)


def test_ac02_expansion(acceptance_log):
    res = checks.expansion_agreement(random.Random(102), 200, 5)
    _run(acceptance_log, "AC02", res, min_cases=200)


def test_ac03_sht_vs_oracle(acceptance_log):
    res = checks.sht_agreement(random.Random(103), 300)
    _run(acceptance_log, "AC03", res, min_cases=300, budget=300)


def test_ac04_tree_counts(acceptance_log):
    res = checks.small_tree_counts(7, 5)
    _run(acceptance_log, "AC04", res, min_cases=6)


def test_ac05_sat_sht_roundtrip(acceptance_log):
    res = checks.sat_sht_roundtrip(4)
    # 163 small formulas plus the unsatisfiable one
    _run(acceptance_log, "AC05", res, min_cases=164, budget=600)


def test_ac06_srcoh(acceptance_log):
    res = checks.srcoh_agreement(random.Random(106), 200)
    _run(acceptance_log, "AC06", res, min_cases=200)


def test_ac07_sscoh_reduction(acceptance_log):
    res = checks.sscoh_reduction_agreement(random.Random(107), 100)
    _run(acceptance_log, "AC07", res, min_cases=100)


def test_ac08_gadget_connectivity(acceptance_log):
    rm = b2sat_to_wboh(odd_parity_formula())
    assert (rm.h.n, rm.h.m) == (41, 65)
    res = checks.gadget_connectivity(random.Random(108), 20)
    # four clauses per three variables, at least 20 gadgets
    _run(acceptance_log, "AC08", res, min_cases=80)


def test_ac09_wboh_forward(acceptance_log):
    res = checks.wboh_roundtrip(random.Random(109), 20)
    _run(acceptance_log, "AC09", res, min_cases=20, budget=20 * 120)


def test_ac10_reorientation(acceptance_log):
    res = checks.reorientation_preserves(random.Random(110), 100)
    _run(acceptance_log, "AC10", res, min_cases=100)


def test_ac11_negative_witness(acceptance_log):
    start = time.perf_counter()
    parallel = wboh_exhaustive(H("abc", "abc"))
    tri = H("ab", "bc", "ca")
    circuit = wboh_exhaustive(tri)
    ok = parallel is None and circuit is not None and strongly_connected_in(orient(tri, circuit), {0, 1, 2})
    seconds = time.perf_counter() - start
    acceptance_log.append(
        f"[{'PASS' if ok else 'FAIL'}] AC11 well-balanced orientation negative witness: 2 cases, {seconds:.1f}s"
    )
    assert parallel is None
    assert circuit is not None and strongly_connected_in(orient(tri, circuit), {0, 1, 2})
