import itertools

import pytest

from rigmat.bernstein import (
    AuxGraph,
    Configuration,
    alternating_trail_bruteforce,
    bernstein_orientations,
    build_aux_graph,
    configuration_to_text,
    count_configurations_matching,
    degree_function,
    find_bernstein_orientation,
    forest_coloring,
    is_alternating_closed_trail,
    is_bernstein,
    is_recoverable,
    orientation_to_text,
    orientations,
    parse_orientation_text,
    topological_positions,
    ufp_configuration,
    verify_ufp,
)
from rigmat.graphcore import (
    CapExceeded,
    Graph,
    GraphError,
    Orientation,
    all_graphs,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from rigmat import canon


def orient(n, arcs):
    return Orientation(Graph.from_edges(n, arcs), frozenset(arcs))


class TestTrailBruteforce:
    def test_source_sink_square(self):
        d = orient(4, [(1, 2), (3, 2), (3, 4), (1, 4)])
        trail = alternating_trail_bruteforce(d)
        assert trail is not None and len(trail) == 4
        assert is_alternating_closed_trail(d, trail)

    def test_tree_has_none(self):
        d = orient(4, [(1, 2), (2, 3), (2, 4)])
        assert alternating_trail_bruteforce(d) is None

    def test_topological_square_has_none(self):
        d = orient(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert alternating_trail_bruteforce(d) is None

    def test_cap(self):
        g = complete_graph(6)
        d = orient(6, [(u, v) for u, v in g.edges])
        with pytest.raises(CapExceeded):
            alternating_trail_bruteforce(d, cap=10)

    def test_validator_rejects_junk(self):
        d = orient(4, [(1, 2), (3, 2), (3, 4), (1, 4)])
        assert not is_alternating_closed_trail(d, [(1, 2), (3, 2)])
        assert not is_alternating_closed_trail(d, [(1, 2), (1, 2), (3, 4), (1, 4)])


class TestAuxGraph:
    def test_single_arc(self):
        f = build_aux_graph(orient(2, [(1, 2)]))
        assert f.edges == frozenset([(1, 2)])
        assert f.is_forest()

    def test_square_is_forest(self):
        d = orient(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        f = build_aux_graph(d)
        assert len(f.edges) == 4
        assert f.is_forest()

    def test_rejects_descending_arc(self):
        with pytest.raises(GraphError):
            build_aux_graph(orient(3, [(2, 1), (2, 3)]))

    def test_edge_count_matches_arcs(self):
        d = orient(5, [(1, 3), (2, 3), (3, 4), (1, 5), (4, 5)])
        assert len(build_aux_graph(d).edges) == 5


class TestIsBernstein:
    def test_directed_triangle(self):
        assert not is_bernstein(orient(3, [(1, 2), (2, 3), (3, 1)]))

    def test_source_sink_square(self):
        assert not is_bernstein(orient(4, [(1, 2), (3, 2), (3, 4), (1, 4)]))

    def test_topological_square(self):
        assert is_bernstein(orient(4, [(1, 2), (2, 3), (3, 4), (1, 4)]))

    def test_exhaustive_vs_bruteforce(self):
        """Fast test == acyclic plus no brute-force trail, over all
        orientations of all graphs with <= 7 edges on <= 5 vertices."""
        for g in all_graphs(5):
            if g.m > 7:
                continue
            for d in orientations(g):
                fast = is_bernstein(d)
                slow = (
                    topological_positions(d) is not None
                    and alternating_trail_bruteforce(d) is None
                )
                assert fast == slow, orientation_to_text(d)


class TestFindOrientation:
    def test_square(self, c4):
        d = find_bernstein_orientation(c4)
        assert d is not None and is_bernstein(d)

    def test_k33_none(self, k33):
        assert find_bernstein_orientation(k33) is None

    def test_petersen_found(self, petersen):
        d = find_bernstein_orientation(petersen)
        assert d is not None and is_bernstein(d)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            find_bernstein_orientation(Graph.from_edges(11, [(1, 2)]))

    def test_matches_enumeration_n4(self):
        for g in all_graphs(4):
            found = find_bernstein_orientation(g) is not None
            exists = any(True for _ in bernstein_orientations(g))
            assert found == exists


class TestDegreeFunction:
    def test_single_blue_arc(self):
        c = Configuration(2, frozenset(), frozenset([(1, 2)]))
        f = degree_function(c)
        assert f.of(1) == (0, 0, 1, 0)
        assert f.of(2) == (0, 0, 0, 1)

    def test_red_reversal_swaps_coordinates(self):
        c = Configuration(3, frozenset([(1, 2), (3, 2)]), frozenset([(1, 3)]))
        rev = Configuration(3, frozenset([(2, 1), (2, 3)]), c.blue)
        f, g = degree_function(c), degree_function(rev)
        for v in range(1, 4):
            ro, ri, bo, bi = f.of(v)
            assert g.of(v) == (ri, ro, bo, bi)

    def test_column_sums(self):
        c = Configuration(4, frozenset([(1, 2), (3, 4)]), frozenset([(2, 3)]))
        f = degree_function(c)
        total = [sum(f.of(v)[i] for v in range(1, 5)) for i in range(4)]
        assert total == [2, 2, 1, 1]


class TestRecoverability:
    def test_monochromatic_cycle_not_recoverable(self):
        tri = Configuration(3, frozenset(), frozenset([(1, 2), (2, 3), (3, 1)]))
        assert not is_recoverable(tri)

    def test_single_edge_all_recoverable(self):
        for red, blue in (
            ([(1, 2)], []),
            ([(2, 1)], []),
            ([], [(1, 2)]),
            ([], [(2, 1)]),
        ):
            c = Configuration(2, frozenset(red), frozenset(blue))
            assert is_recoverable(c)

    def test_bernstein_unions_recoverable_n4(self):
        for g in all_graphs(4):
            for d in bernstein_orientations(g):
                arcs = sorted(d.arcs)
                for k in range(min(4, len(arcs) + 1)):
                    red = frozenset(arcs[:k])
                    blue = frozenset(arcs[k:])
                    assert is_recoverable(Configuration(4, red, blue))

    def test_cap(self):
        g = complete_graph(6)
        arcs = frozenset((u, v) for u, v in g.edges)
        with pytest.raises(CapExceeded):
            is_recoverable(Configuration(6, arcs, frozenset()))

    def test_count_includes_self(self, c4):
        d = find_bernstein_orientation(c4)
        conf = ufp_configuration(c4, d)
        assert count_configurations_matching(c4, degree_function(conf), limit=5) == 1


class TestPipeline:
    def test_single_edge(self):
        g = Graph.from_edges(2, [(1, 2)])
        d = Orientation(g, frozenset([(1, 2)]))
        conf = ufp_configuration(g, d)
        assert conf.m == 1
        assert verify_ufp(conf).passed

    def test_lemma_out_in_degrees_pre_reversal(self):
        """Pre-reversal coloring has blue out-degree and red in-degree <= 1."""
        for g in all_graphs(4):
            for d in bernstein_orientations(g):
                red, blue = forest_coloring(d)
                out_b: dict = {}
                in_r: dict = {}
                for a, b in blue:
                    out_b[a] = out_b.get(a, 0) + 1
                for a, b in red:
                    in_r[b] = in_r.get(b, 0) + 1
                assert all(x <= 1 for x in out_b.values())
                assert all(x <= 1 for x in in_r.values())

    def test_exhaustive_n5(self):
        for g in all_graphs(5):
            for d in bernstein_orientations(g):
                conf = ufp_configuration(g, d)
                assert verify_ufp(conf).fully_verified, orientation_to_text(d)

    def test_rejects_non_bernstein(self):
        g = cycle_graph(3)
        d = Orientation(g, frozenset([(1, 2), (2, 3), (3, 1)]))
        with pytest.raises(GraphError):
            ufp_configuration(g, d)

    def test_verify_catches_blue_cycle(self):
        c = Configuration(3, frozenset(), frozenset([(1, 2), (2, 3), (3, 1)]))
        rep = verify_ufp(c)
        assert not rep.blue_forest and rep.recoverable is False
        assert not rep.passed

    def test_empty_graph_vacuous(self):
        c = Configuration(1, frozenset(), frozenset())
        assert verify_ufp(c).passed


class TestColorblindness:
    def test_acyclic_orientation_unique_degree_sequence(self):
        """No other orientation shares the degree sequence of an acyclic one."""
        for g in all_graphs(4):
            groups: dict = {}
            for d in orientations(g):
                key = (
                    tuple(d.out_degree(v) for v in range(1, 5)),
                    tuple(d.in_degree(v) for v in range(1, 5)),
                )
                groups.setdefault(key, []).append(d)
            for ds in groups.values():
                for d in ds:
                    if topological_positions(d) is not None:
                        assert len(ds) == 1

    def test_equal_degree_colorings_force_trail(self):
        """Two distinct colorings of one orientation with equal degree
        functions mean the orientation carries an alternating closed trail."""
        for g in all_graphs(4):
            if g.m > 6:
                continue
            for d in orientations(g):
                arcs = sorted(d.arcs)
                seen: dict = {}
                clash = False
                for mask in range(1 << len(arcs)):
                    red = frozenset(a for k, a in enumerate(arcs) if mask >> k & 1)
                    conf = Configuration(4, red, frozenset(d.arcs) - red)
                    key = degree_function(conf).counts
                    if key in seen:
                        clash = True
                        break
                    seen[key] = mask
                if clash:
                    assert alternating_trail_bruteforce(d) is not None


class TestTextForms:
    def test_orientation_roundtrip(self, petersen):
        d = find_bernstein_orientation(petersen)
        text = orientation_to_text(d)
        back = parse_orientation_text(10, text)
        assert back.arcs == d.arcs

    def test_configuration_text(self, c4):
        d = find_bernstein_orientation(c4)
        conf = ufp_configuration(c4, d)
        text = configuration_to_text(conf)
        assert len(text.split()) == 4
        assert all(tok[0] in "RB" and ">" in tok for tok in text.split())
