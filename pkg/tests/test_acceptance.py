"""Acceptance suite: every criterion runs exhaustively at its stated size
cap and prints one PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import itertools

from rigmat import bernstein, hconn, laman, matroidlab, verify
from rigmat.graphcore import complete_bipartite, complete_graph
from rigmat._kernels import BACKEND

SEED = 20260809


def _report(num: int, description: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {num}: {status} - {description}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_bernstein_equivalence():
    """Matrix independence (char 0) iff Bernstein-orientable, for all 2^15
    edge subsets of K_6; zero mismatches."""
    r = verify.suite_bernstein_equiv(nmax=6, seed=SEED)
    _report(
        1,
        "bernstein equivalence on all edge subsets of K_6",
        r.status == "pass" and r.instances == 2**15,
        f"{r.instances} graphs, {len(r.failures)} mismatches, {r.wall_time:.1f}s [{BACKEND}]",
    )


def test_criterion_2_characteristic_invariance():
    """Independent-set families for char 0, 2, 3, 5 coincide on all graphs
    with n <= 6; dependent verdicts confirmed symbolically."""
    r = verify.suite_char_p(nmax=6, seed=SEED)
    _report(
        2,
        "characteristic invariance (0,2,3,5) on n <= 6",
        r.status == "pass",
        f"{r.instances} verdicts, {len(r.failures)} mismatches, {r.wall_time:.1f}s",
    )


def test_criterion_3_cubic_classification():
    """Connected cubic counts 1, 2, 5, 19 for n = 4, 6, 8, 10, validated by
    the built-in labeled-scan enumerator; every graph except K_4 and K_33
    passes both independence oracles."""
    expected = {4: 1, 6: 2, 8: 5, 10: 19}
    counts = {}
    consistent = True
    for n in expected:
        census = matroidlab.cubic_census(n)
        counts[n] = census["classes"]
        consistent &= census["consistent"]
    r = verify.suite_cubic(nmax=10, seed=SEED)
    _report(
        3,
        "cubic classification n = 4..10",
        counts == expected and consistent and r.status == "pass",
        f"counts {counts}, cross-validated={consistent}, {r.wall_time:.1f}s",
    )


def test_criterion_4_k33_status():
    """K_33 independent in the plane matroid, a pair-matrix circuit in
    characteristics 0, 2, 3, 5."""
    r = verify.suite_k33(seed=SEED)
    _report(4, "K_33 status in both families", r.status == "pass")


def test_criterion_5_duality():
    """Base-complement duality of the pair and wedge matroids for
    n = 4, 5, 6 and characteristics 0, 2, 3."""
    r = verify.suite_duality(nmax=6, seed=SEED)
    _report(
        5,
        "wedge duality n in {4,5,6}, chars {0,2,3}",
        r.status == "pass",
        f"{r.wall_time:.1f}s",
    )


def test_criterion_6_forest_partition_pipeline():
    """Every Bernstein orientation of every orientable graph with n <= 6
    yields a configuration passing all forest-partition checks, including
    brute-force recoverability."""
    report = verify.VerificationReport("pipeline", {})
    verify._check_pipeline(report, 6)
    _report(
        6,
        "forest-partition pipeline on all Bernstein orientations, n <= 6",
        not report.failures and report.instances > 0,
        f"{report.instances} (graph, orientation) pairs",
    )


def test_criterion_7_rank_formula():
    """Both oracles give rank 2n-3 on K_n (pebble and randomized for
    n = 3..7, symbolic for n = 3..6)."""
    ok = True
    for n in range(3, 8):
        ok &= laman.r_rank(complete_graph(n)) == 2 * n - 3
        fc = hconn.FieldConfig.for_characteristic(0)
        lb, _ = hconn.h_rank_randomized(complete_graph(n), fc, trials=3, seed=SEED)
        ok &= lb == 2 * n - 3
    for n in range(3, 7):
        ok &= hconn.h_rank_symbolic(complete_graph(n), 0, cap=15) == 2 * n - 3
    _report(7, "rank formula 2n-3 on complete graphs", ok)


def test_criterion_8_structural_lemmas():
    """Circuit structure (min degree 3, 2-connectivity, tripling, 2-cut
    decomposition) at n <= 6; subcubic independence at n <= 7; base
    suppression and fundamental circuits at n <= 7."""
    report = verify.VerificationReport("structure", {})
    verify._check_circuit_structure(report, 6, SEED)
    circuits_done = report.instances
    verify._check_subcubic(report, 7, SEED)
    subcubic_done = report.instances - circuits_done
    verify._check_bases(report, 7)
    bases_done = report.instances - circuits_done - subcubic_done
    _report(
        8,
        "structural suites (circuits, subcubic, bases)",
        not report.failures,
        f"{circuits_done} circuit, {subcubic_done} subcubic, {bases_done} base checks",
    )


def test_criterion_9_internal_oracle_agreement():
    """Pebble game vs subset oracle on all labeled graphs with n <= 7;
    fast orientation test vs brute-force trail search on all orientations
    of graphs with <= 10 edges; randomized vs symbolic rank on 10^3 random
    graphs."""
    report = verify.VerificationReport("agreement", {})
    verify._check_oracle_agreement(report, 6, SEED)
    _report(
        9,
        "internal oracle agreement",
        not report.failures,
        f"{report.instances} comparisons (incl. all 2^21 labeled graphs on 7 vertices)",
    )
