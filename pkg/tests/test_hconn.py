import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from rigmat._kernels import pyref
from rigmat.graphcore import (
    CapExceeded,
    Graph,
    all_graphs,
    complete_bipartite,
    complete_graph,
    path_graph,
    petersen_graph,
    prism_graph,
)
from rigmat.hconn import (
    FieldConfig,
    Polynomial,
    build_h_matrix,
    confirm_dependent,
    h_independent,
    h_rank_randomized,
    h_rank_symbolic,
)
from rigmat.laman import r_independent


class TestPolynomial:
    def test_arithmetic(self):
        x = Polynomial.variable(0, 3)
        y = Polynomial.variable(1, 3)
        p = (x + y) * (x - y)
        q = x * x - y * y
        assert p == q
        assert p.exact_div(x + y) == x - y

    def test_char_p(self):
        x = Polynomial.variable(0, 2, char=3)
        p = (x + x + x)
        assert p.is_zero()

    def test_inexact_division(self):
        x = Polynomial.variable(0, 2)
        y = Polynomial.variable(1, 2)
        with pytest.raises(ArithmeticError):
            (x * x + y).exact_div(y)

    def test_evaluate(self):
        x = Polynomial.variable(0, 2)
        y = Polynomial.variable(1, 2)
        p = x * x + y
        assert p.evaluate([3, 5]) == 14

    def test_monomials_sorted(self):
        x = Polynomial.variable(0, 2)
        y = Polynomial.variable(1, 2)
        p = y + x * x
        exps = [e for e, _ in p.monomials()]
        assert exps == [(2, 0), (0, 1)]


class TestMatrixConstruction:
    def test_single_edge_row(self):
        hm = build_h_matrix(Graph.from_edges(2, [(1, 2)]), 2)
        row = hm.rows[0]
        n = 2
        assert row[0] == Polynomial.variable(1, 2 * n)  # r_2
        assert row[1] == Polynomial.variable(n + 1, 2 * n)  # b_2
        assert row[2] == Polynomial.variable(0, 2 * n, coeff=-1)  # -r_1
        assert row[3] == Polynomial.variable(n + 0, 2 * n, coeff=-1)  # -b_1

    def test_k3_pattern(self):
        hm = build_h_matrix(complete_graph(3), 3)
        assert hm.edges == ((1, 2), (1, 3), (2, 3))
        assert hm.ncols == 6
        for row, (i, j) in zip(hm.rows, hm.edges):
            cols = sorted(row)
            assert cols == [2 * (i - 1), 2 * (i - 1) + 1, 2 * (j - 1), 2 * (j - 1) + 1]
            for poly in row.values():
                assert poly.n_terms == 1

    @given(graphs(min_n=2, max_n=7))
    @settings(max_examples=50, deadline=None)
    def test_shape(self, g):
        hm = build_h_matrix(g, g.n)
        assert len(hm.rows) == g.m
        assert hm.ncols == 2 * g.n

    def test_symbolic_matches_evaluated_kernel(self):
        """Evaluating the symbolic matrix at the xorshift point reproduces
        the kernel's evaluated matrix."""
        g = prism_graph()
        p = (1 << 61) - 1
        seed = 12345
        rng = pyref._Xorshift(seed)
        r = [rng.next() % p for _ in range(6)]
        b = [rng.next() % p for _ in range(6)]
        expected = pyref._hmat_rows(6, *g.edge_arrays(), r, b, p)
        hm = build_h_matrix(g, 6)
        values = r + b
        for row, exp in zip(hm.rows, expected):
            dense = [0] * 12
            for c, poly in row.items():
                dense[c] = poly.evaluate(values, mod=p)
            assert dense == exp


class TestSymbolicRank:
    def test_single_edge(self):
        assert h_rank_symbolic(Graph.from_edges(2, [(1, 2)]), 0) == 1

    def test_k4(self, k4):
        assert h_rank_symbolic(k4, 0) == 5

    def test_k33_char0(self, k33):
        assert h_rank_symbolic(k33, 0) == 8

    def test_k33_all_chars(self, k33):
        for c in (0, 2, 3, 5):
            assert h_rank_symbolic(k33, c) == 8

    def test_complete_graphs(self):
        for n in range(3, 6):
            assert h_rank_symbolic(complete_graph(n), 0) == 2 * n - 3

    def test_cap(self):
        with pytest.raises(CapExceeded):
            h_rank_symbolic(complete_graph(6), 0)  # 15 rows > default cap
        assert h_rank_symbolic(complete_graph(6), 0, cap=15) == 9


class TestRandomizedRank:
    def test_k4(self, k4):
        fc = FieldConfig.for_characteristic(0)
        assert h_rank_randomized(k4, fc, trials=3, seed=1) == (5, False)

    def test_prism_certified(self, prism):
        for char in (0, 2, 3, 5):
            fc = FieldConfig.for_characteristic(char)
            assert h_rank_randomized(prism, fc, trials=3, seed=1) == (9, True)

    def test_forest_certified(self):
        fc = FieldConfig.for_characteristic(2)
        g = path_graph(6)
        assert h_rank_randomized(g, fc, trials=1, seed=0) == (5, True)

    @given(graphs(min_n=2, max_n=6, max_edges=8))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_symbolic(self, g):
        fc = FieldConfig.for_characteristic(0)
        lb, _ = h_rank_randomized(g, fc, trials=3, seed=7)
        assert lb == h_rank_symbolic(g, 0)

    def test_monotone_in_edges(self):
        rng = random.Random(5)
        fc = FieldConfig.for_characteristic(0)
        for _ in range(20):
            n = rng.randint(3, 6)
            pairs = list(itertools.combinations(range(1, n + 1), 2))
            m = rng.randint(1, len(pairs))
            edges = rng.sample(pairs, m)
            g = Graph.from_edges(n, edges)
            sub = Graph.from_edges(n, edges[: m // 2])
            assert (
                h_rank_randomized(sub, fc, 3, seed=3)[0]
                <= h_rank_randomized(g, fc, 3, seed=3)[0]
            )


class TestFieldConfig:
    def test_char0(self):
        fc = FieldConfig.for_characteristic(0)
        assert fc.extension_degree == 1

    def test_small_primes(self):
        assert FieldConfig.for_characteristic(2).extension_degree == 40
        assert FieldConfig.for_characteristic(3).extension_degree == 26
        assert FieldConfig.for_characteristic(5).extension_degree == 18

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            FieldConfig(15, 20)

    def test_rejects_small_field(self):
        with pytest.raises(ValueError):
            FieldConfig(2, 8)


class TestIndependence:
    def test_k33_dependent(self, k33):
        v = h_independent(k33, 0)
        assert not v.independent and v.method == "symbolic"

    def test_petersen_independent(self, petersen):
        v = h_independent(petersen, 0)
        assert v.independent and v.method == "randomized-certified"

    def test_empty_trivial(self):
        assert h_independent(Graph(3), 0).method == "trivial"

    def test_chars_agree_n4(self):
        for g in all_graphs(4):
            verdicts = {h_independent(g, c, seed=11).independent for c in (0, 2, 3, 5)}
            assert len(verdicts) == 1, g

    def test_h_implies_r_n5(self):
        for g in all_graphs(5):
            if h_independent(g, 0, seed=3).independent:
                assert r_independent(g), g

    def test_charp_implies_char0_n4(self):
        for g in all_graphs(4):
            for p in (2, 3):
                if h_independent(g, p, seed=3).independent:
                    assert h_independent(g, 0, seed=3).independent

    def test_confirm_dependent_returns_core(self, k4):
        big = Graph(6, complete_graph(4).edges | frozenset([(5, 6)]))
        core = confirm_dependent(big, 0)
        assert core is not None

    def test_dependent_with_4clique(self):
        g = complete_graph(5)
        v = h_independent(g, 0)
        assert not v.independent and v.method == "symbolic"

    def test_zero_extension_preserves_independence_n6(self):
        from rigmat.graphcore import zero_extension
        from rigmat.matroidlab import graph_classes

        for g in graph_classes(6):
            if not h_independent(g, 0, seed=1).independent:
                continue
            for u, w in itertools.combinations(range(1, g.n + 1), 2):
                ext = zero_extension(g, u, w)
                assert h_independent(ext, 0, seed=1).independent, (g, u, w)
