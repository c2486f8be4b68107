import pytest

from helpers import brute_factor_cuts
from homcut.cuts import check_factor_cut, enumerate_factor_cuts, FactorCut
from homcut.gadgets import (
    TargetRejected,
    analyze_target,
    build_factorcut,
    build_factorcut_case1,
    build_factorcut_case2,
    build_surjective_instance,
    lift_target,
    provenance_json,
)
from homcut.graph import (
    Graph,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    distances_from,
    graph_from_edges,
    induced_subgraph,
    max_clique_size,
    path_graph,
    true_twin_classes,
)
from homcut.hom import SURJECTIVE, solve
from homcut.suites import (
    C4_TWO_LOOPS,
    DIAMOND_TWO_LOOPS,
    P3_REFL_ENDS,
    P4_REFL_ENDS,
)

TWO_TAILED = graph_from_edges(12, [
    (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4),
    (0, 5), (0, 6), (5, 7), (6, 8),
    (4, 9), (4, 10), (9, 10), (9, 11), (10, 11),
    (0, 0), (4, 4),
])


class TestAnalyzeTarget:
    def test_two_looped_cycle(self):
        ta = analyze_target(C4_TWO_LOOPS)
        # oracle recomputation from first principles
        assert ta.ell == distances_from(C4_TWO_LOOPS, ta.p)[ta.q] == 2
        assert ta.omega == max_clique_size(C4_TWO_LOOPS) == 2
        assert sorted(ta.n_p) == [1, 3] and ta.r_p == ta.r_q == 1

    def test_two_tailed_example(self):
        ta = analyze_target(TWO_TAILED)
        assert ta.ell == 3 and ta.omega == 3
        # orientation is normalized so that r_p <= r_q
        assert ta.r_p <= ta.r_q and (ta.r_p, ta.r_q) == (1, 2)

    def test_reflexive_edge_rejected(self):
        with pytest.raises(TargetRejected, match="non-adjacent"):
            analyze_target(path_graph(2, loops=(0, 1)))

    def test_wrong_loop_count_rejected(self):
        with pytest.raises(TargetRejected, match="exactly 2"):
            analyze_target(path_graph(3, loops=(0,)))

    def test_disconnected_rejected(self):
        g = graph_from_edges(4, [(0, 1), (2, 3), (0, 0), (2, 2)])
        with pytest.raises(TargetRejected, match="connected"):
            analyze_target(g)

    def test_halves_partition_and_membership(self):
        ta = analyze_target(P4_REFL_ENDS)
        assert ta.p in ta.h1 and ta.q in ta.h2
        assert ta.h1 | ta.h2 == frozenset(range(4)) and not (ta.h1 & ta.h2)

    def test_factors_are_irreflexive_with_root_clique(self):
        ta = analyze_target(DIAMOND_TWO_LOOPS)
        for factor in (ta.f1, ta.f2):
            assert factor.graph.is_irreflexive
            assert len(factor.roots) == ta.omega
            for a in factor.roots:
                for b in factor.roots:
                    if a != b:
                        assert factor.graph.has_edge(a, b)


class TestFactorCutCase1:
    def test_clique_size_k3(self):
        inst = build_factorcut_case1(complete_graph(3), 0, 1, 2)
        assert inst.meta["k"] == 3 and inst.graph.n == 6

    def test_equivalence_k3_both_negative(self):
        k3 = complete_graph(3)
        inst = build_factorcut_case1(k3, 0, 1, 2)
        assert brute_factor_cuts(k3, 1, 1) == []
        assert brute_factor_cuts(inst.graph, 1, 2) == []

    def test_p4_ends_positive(self):
        p4 = path_graph(4)
        inst = build_factorcut_case1(p4, 0, 3, 2)
        assert enumerate_factor_cuts(inst.graph, 1, 2, max_n=inst.graph.n)

    def test_one_outside_neighbour_rule(self):
        g = cycle_graph(5)
        inst = build_factorcut_case1(g, 0, 2, 3)
        counts = {}
        for u, v in inst.graph.edges:
            for kv, other in ((u, v), (v, u)):
                if kv >= g.n and other < g.n and other != 0:
                    counts[kv] = counts.get(kv, 0) + 1
        assert all(c <= 1 for c in counts.values())
        # every non-root original vertex gained exactly j - 1 clique edges
        for v in range(1, g.n):
            gained = sum(1 for w in inst.graph.neighbors(v) if w >= g.n)
            assert gained == 2

    def test_passthrough_when_target_is_source(self):
        g = path_graph(3)
        inst = build_factorcut_case1(g, 0, 2, 1)
        assert inst.graph == g and inst.meta["passthrough"]

    def test_dispatch(self):
        g = path_graph(4)
        assert build_factorcut(g, 0, 3, 1, 2).meta["kind"] == "factorcut-case1"
        assert build_factorcut(g, 0, 3, 2, 2).meta["kind"] == "factorcut-case2"


class TestFactorCutCase2:
    def test_clique_size_k3(self):
        inst = build_factorcut_case2(complete_graph(3), 0, 1, 2, 2)
        assert inst.meta["k"] == 4 and inst.graph.n == 11

    def test_equivalence_k3_negative(self):
        inst = build_factorcut_case2(complete_graph(3), 0, 1, 2, 2)
        assert brute_factor_cuts(inst.graph, 2, 2) == []

    def test_p3_witness_shape(self):
        # a matching cut of the path lifts to the two-clique witness shape
        p3 = path_graph(3)
        inst = build_factorcut_case2(p3, 0, 2, 2, 2)
        k = inst.meta["k"]
        v1 = frozenset({0}) | frozenset(range(3, 3 + k))
        v2 = frozenset({1, 2}) | frozenset(range(3 + k, 3 + 2 * k))
        assert check_factor_cut(inst.graph, FactorCut(v1, v2, 2, 2))

    def test_rejects_small_i(self):
        with pytest.raises(ValueError):
            build_factorcut_case2(path_graph(3), 0, 2, 1, 2)

    def test_provenance_reconstructs_input(self):
        g = cycle_graph(5)
        for inst in (build_factorcut_case1(g, 0, 2, 3),
                     build_factorcut_case2(g, 0, 2, 2, 3)):
            assert len(inst.provenance) == inst.graph.n
            originals = [v for v, rec in enumerate(inst.provenance)
                         if rec["role"] == "original"]
            sub, old = induced_subgraph(inst.graph, originals)
            assert old == list(range(g.n)) and sub == g


class TestSurjectiveInstance:
    def test_size_formula_c4_target(self):
        ta = analyze_target(C4_TWO_LOOPS)
        inst = build_surjective_instance(ta, path_graph(3), 0, 2)
        assert inst.graph.n == 2 * 3 + 2 * 1 * 2 + 4 - 2 == 12

    def test_positive_instance(self):
        ta = analyze_target(C4_TWO_LOOPS)
        inst = build_surjective_instance(ta, path_graph(3), 0, 2)
        assert solve(inst.graph, C4_TWO_LOOPS, SURJECTIVE) is not None

    def test_negative_instance(self):
        ta = analyze_target(C4_TWO_LOOPS)
        inst = build_surjective_instance(ta, complete_graph(3), 0, 1)
        assert solve(inst.graph, C4_TWO_LOOPS, SURJECTIVE) is None

    def test_longer_distance_paths(self):
        ta = analyze_target(P4_REFL_ENDS)
        inst = build_surjective_instance(ta, path_graph(2), 0, 1)
        assert inst.graph.n == 2 * 2 + 2 * 2 * 1 + 4 - 2
        inner = [v for v, rec in enumerate(inst.provenance) if rec["role"] == "path_inner"]
        assert not inner  # bridge paths of length 1 have no inner vertices

    def test_inner_path_vertices_appear_at_distance_four(self):
        h = path_graph(5, loops=(0, 4))
        ta = analyze_target(h)
        inst = build_surjective_instance(ta, path_graph(2), 0, 1)
        inner = [v for v, rec in enumerate(inst.provenance) if rec["role"] == "path_inner"]
        assert len(inner) == 2  # one per bridge path
        for v in inner:
            assert len(inst.graph.neighbors(v)) == 2

    def test_provenance_total_and_reconstructs_input(self):
        ta = analyze_target(DIAMOND_TWO_LOOPS)
        g = path_graph(3)
        inst = build_surjective_instance(ta, g, 0, 2)
        assert len(inst.provenance) == inst.graph.n
        # clique blocks reconstruct the input graph through the red/blue gluing
        roles = [rec["role"] for rec in inst.provenance]
        assert roles.count("clique") == ta.omega * g.n
        # factor vertices reconstruct the target halves without their centres
        for which, part, centre in (("f1", ta.h1, ta.p), ("f2", ta.h2, ta.q)):
            ids = [v for v, rec in enumerate(inst.provenance) if rec["role"] == which]
            origins = [inst.provenance[v]["target_vertex"] for v in ids]
            assert sorted(origins) == sorted(part - {centre})
            sub, old = induced_subgraph(inst.graph, ids)
            want, _ = induced_subgraph(ta.target, part - {centre})
            assert are_isomorphic(sub, want) if sub.n <= 8 else True

    def test_red_neighbours_form_clique_blue_independent(self):
        ta = analyze_target(C4_TWO_LOOPS)
        g = complete_graph(3)
        inst = build_surjective_instance(ta, g, 0, 1)
        size = inst.meta["clique_size"]
        for u in range(g.n):
            reds, blues = [], []
            for v, rec in enumerate(inst.provenance):
                if rec["role"] == "red_blue":
                    if rec["red_of"] == u:
                        reds.append(v)
                    if rec["blue_of"] == u:
                        blues.append(v)
            for a in reds:
                for b in reds:
                    if a != b:
                        assert inst.graph.has_edge(a, b)
            for a in blues:
                for b in blues:
                    if a != b:
                        assert not inst.graph.has_edge(a, b)

    def test_rejects_bad_inputs(self):
        ta = analyze_target(C4_TWO_LOOPS)
        with pytest.raises(ValueError, match="distinct"):
            build_surjective_instance(ta, path_graph(3), 1, 1)
        with pytest.raises(ValueError, match="at least 2"):
            build_surjective_instance(ta, Graph(1, frozenset()), 0, 0)
        with pytest.raises(ValueError, match="below the clique number"):
            build_surjective_instance(ta, path_graph(3), 0, 2, clique_size=1)

    def test_provenance_json_is_one_based(self):
        ta = analyze_target(C4_TWO_LOOPS)
        inst = build_surjective_instance(ta, path_graph(2), 0, 1)
        payload = provenance_json(inst)
        assert set(payload) == {str(v + 1) for v in range(inst.graph.n)}
        assert payload["1"]["role"] == "clique" and payload["1"]["vertex"] == 1


class TestLift:
    def test_zero_lift_is_identity(self):
        ta = analyze_target(P3_REFL_ENDS)
        assert lift_target(P3_REFL_ENDS, ta, 0, 0) == P3_REFL_ENDS

    def test_single_twin_shape(self):
        ta = analyze_target(P3_REFL_ENDS)
        lifted = lift_target(P3_REFL_ENDS, ta, 1, 0)
        assert lifted.n == 4
        assert lifted.reflexive(3) and lifted.has_edge(3, ta.p)
        classes = [sorted(c) for c in true_twin_classes(lifted, lifted.reflexive_vertices)]
        assert sorted(classes) == [[ta.p, 3], [ta.q]]

    def test_twin_classes_after_double_lift(self):
        ta = analyze_target(C4_TWO_LOOPS)
        lifted = lift_target(C4_TWO_LOOPS, ta, 2, 1)
        classes = true_twin_classes(lifted, lifted.reflexive_vertices)
        assert sorted(len(c) for c in classes) == [2, 3]

    def test_surjective_equivalence_spot(self):
        # positive and negative instances agree across the lift
        ta = analyze_target(P3_REFL_ENDS)
        lifted = lift_target(P3_REFL_ENDS, ta, 1, 0)
        for g, roots in ((path_graph(3), (0, 2)), (complete_graph(3), (0, 1))):
            small = build_surjective_instance(ta, g, *roots)
            big = build_surjective_instance(ta, g, *roots, clique_size=ta.omega + 1)
            a = solve(small.graph, P3_REFL_ENDS, SURJECTIVE) is not None
            b = solve(big.graph, lifted, SURJECTIVE) is not None
            assert a == b

    def test_mismatched_analysis_rejected(self):
        ta = analyze_target(P3_REFL_ENDS)
        with pytest.raises(ValueError):
            lift_target(C4_TWO_LOOPS, ta, 1, 0)
