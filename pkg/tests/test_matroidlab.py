import itertools

import pytest

from rigmat import canon
from rigmat.graphcore import (
    Graph,
    GraphError,
    complete_bipartite,
    complete_graph,
    prism_graph,
    petersen_graph,
)
from rigmat.laman import laman_count_ok
from rigmat.matroidlab import (
    MatroidOracle,
    build_wedge_oracle,
    check_duality,
    classify_cubic,
    cubic_census,
    enumerate_circuits,
    generate_connected_cubic,
    h_oracle,
    is_circuit,
    r_oracle,
    rank,
    tripling_check,
    two_cut_check,
    wedge_rank_randomized,
    wedge_rank_symbolic,
)


class TestOracleBasics:
    def test_ground(self):
        o = r_oracle(4)
        assert len(o.ground) == 6

    def test_empty_independent(self):
        for o in (r_oracle(4), h_oracle(4)):
            assert o.indep(Graph(4))

    def test_rank_examples(self, k33):
        assert rank(r_oracle(5), complete_graph(5).edges) == 7
        assert rank(h_oracle(6), k33.edges) == 8
        assert rank(r_oracle(4), []) == 0


class TestCircuits:
    def test_k33_h_circuit(self, k33):
        assert is_circuit(h_oracle(6), k33)

    def test_k33_not_r_circuit(self, k33):
        assert not is_circuit(r_oracle(6), k33)

    def test_k4_both(self, k4):
        assert is_circuit(r_oracle(4), k4)
        assert is_circuit(h_oracle(4), k4)

    def test_enumerate_r_on_4(self):
        circuits = enumerate_circuits(r_oracle(4), 4, 6)
        assert len(circuits) == 1
        assert canon.are_isomorphic(circuits[0], complete_graph(4))

    def test_enumerate_h_on_6_includes_k33(self, k33):
        circuits = enumerate_circuits(h_oracle(6), 6, 9)
        assert any(canon.are_isomorphic(c, k33) for c in circuits)

    def test_enumerated_circuits_minimal_by_oracle(self):
        """Every enumerated circuit is dependent with independent deletions,
        re-checked against the subset-count oracle."""
        for c in enumerate_circuits(r_oracle(5), 5, 8):
            assert not laman_count_ok(c)
            for e in c.edges:
                assert laman_count_ok(c.remove_edge(*e))

    def test_circuits_2connected(self):
        for c in enumerate_circuits(r_oracle(5), 5, 8):
            assert c.is_2_connected()


class TestWedge:
    def test_total_rank_dimension_2(self):
        for p in (0, 2, 5):
            pairs = list(itertools.combinations(range(1, 5), 2))
            lb, _ = wedge_rank_randomized(pairs, 4, 2, p, seed=3)
            assert lb == 1

    def test_w5_3_rank(self):
        pairs = list(itertools.combinations(range(1, 6), 2))
        assert wedge_rank_symbolic(pairs, 5, 3, 0) == 3
        lb, _ = wedge_rank_randomized(pairs, 5, 3, 0, seed=1)
        assert lb == 3

    def test_common_vector_pairs_span_2(self):
        # wedges with a shared vector lie in a 2-dimensional image
        star = [(1, j) for j in range(2, 6)]
        assert wedge_rank_symbolic(star, 5, 3, 0) == 2

    def test_single_pair_independent(self):
        for r in (2, 3, 4):
            o = build_wedge_oracle(5, r, 0)
            assert o.indep(Graph.from_edges(5, [(1, 2)]))

    def test_symbolic_matches_randomized(self):
        import random

        rng = random.Random(9)
        pairs = list(itertools.combinations(range(1, 6), 2))
        for _ in range(20):
            sub = rng.sample(pairs, rng.randint(1, 6))
            for p in (0, 3):
                lb, _ = wedge_rank_randomized(sub, 5, 3, p, seed=rng.getrandbits(32))
                assert lb == wedge_rank_symbolic(sub, 5, 3, p)

    def test_dimension_guard(self):
        with pytest.raises(GraphError):
            build_wedge_oracle(4, 1, 0)


class TestDuality:
    def test_n4(self):
        assert check_duality(4, 0)

    def test_n5_chars(self):
        for p in (0, 2, 3):
            assert check_duality(5, p)

    def test_base_counts_match(self):
        # complementation is a bijection between bases and co-bases
        from rigmat.hconn import h_independent

        pairs = sorted(itertools.combinations(range(1, 6), 2))
        wedge = build_wedge_oracle(5, 3, 0)
        h_bases = w_bases = 0
        for combo in itertools.combinations(pairs, 7):
            b = Graph(5, frozenset(combo))
            comp = Graph(5, frozenset(pairs) - b.edges)
            h_bases += h_independent(b, 0).independent
            w_bases += wedge.indep(comp)
        assert h_bases == w_bases


class TestCubic:
    def test_n4(self):
        gs = generate_connected_cubic(4)
        assert len(gs) == 1
        assert canon.are_isomorphic(gs[0], complete_graph(4))

    def test_n6(self):
        gs = generate_connected_cubic(6)
        assert len(gs) == 2
        codes = {canon.canonical_code(g) for g in gs}
        assert canon.canonical_code(complete_bipartite(3, 3)) in codes
        assert canon.canonical_code(prism_graph()) in codes

    def test_census_consistency(self):
        for n in (4, 6, 8):
            census = cubic_census(n)
            assert census["consistent"], census

    def test_n8_count(self):
        assert len(generate_connected_cubic(8)) == 5

    def test_odd_rejected(self):
        with pytest.raises(GraphError):
            generate_connected_cubic(5)

    def test_classify(self, k4, k33, prism, petersen):
        assert classify_cubic(k4) == "K4-circuit-everywhere"
        assert classify_cubic(k33) == "K33-R-independent-else-circuit"
        assert classify_cubic(prism) == "omniforest-candidate"
        assert classify_cubic(petersen) == "omniforest-candidate"

    def test_classify_rejects_noncubic(self, c4):
        with pytest.raises(GraphError):
            classify_cubic(c4)


class TestTripling:
    def test_k4_in_r(self, k4):
        rep = tripling_check(r_oracle(4), k4)
        assert rep.passed
        assert rep.part2_vacuous  # all vertices pairwise adjacent
        assert rep.edge_checks == 4 * 3  # 4 choices of v, 3 non-incident edges

    def test_k33_in_h(self, k33):
        rep = tripling_check(h_oracle(6), k33)
        assert rep.passed
        assert not rep.part2_vacuous

    def test_requires_circuit(self, c4):
        with pytest.raises(GraphError):
            tripling_check(r_oracle(4), c4)


class TestTwoCut:
    def test_k4_has_no_separator(self, k4):
        rep = two_cut_check(r_oracle(4), k4)
        assert not rep.has_two_cut and rep.passed

    def test_glued_k4s(self):
        # two K4s sharing the 2-cut {3,4}, shared edge removed
        a = complete_graph(4).edges
        b = {(u + 2, v + 2) for u, v in complete_graph(4).edges}
        g = Graph(6, (frozenset(a) | frozenset(b)) - {(3, 4)})
        oracle = r_oracle(6)
        assert is_circuit(oracle, g)
        rep = two_cut_check(oracle, g)
        assert rep.has_two_cut and rep.passed


class TestCustomOracle:
    def test_uniform_matroid(self):
        o = MatroidOracle(4, "U", lambda g: g.m <= 2)
        assert rank(o, complete_graph(4).edges) == 2
        assert is_circuit(o, Graph.from_edges(4, [(1, 2), (1, 3), (2, 3)]))
