from itertools import combinations

import pytest

from chromadisk import (
    ConditioningError,
    ContractViolationError,
    EnumerationCapError,
    Forest,
    Graph,
    IntPolynomial,
    RootedTreeView,
    VertexOrdering,
    chromatic_deletion_contraction,
    chromatic_to_forest,
    chromatic_via_penrose,
    enumerate_penrose_forests,
    forest_polynomial,
    forest_to_chromatic,
    is_penrose_forest,
    is_penrose_tree,
    obstruction_check,
    penrose_closure,
    penrose_polynomial,
    penrose_trees_containing,
    ratio_R,
    verify_partition_scheme,
)
from chromadisk.corpus import (
    all_graphs_up_to_iso,
    complete_graph,
    cycle_graph,
    diamond_graph,
    path_graph,
    random_graph,
    random_ordering,
)
from oracles import (
    brute_force_penrose_forests,
    brute_force_penrose_trees_containing,
    brute_force_trees_containing,
    is_forest_edge_set,
)


def k3():
    return complete_graph(3)


def nat(n):
    return VertexOrdering.natural(n)


class TestOrdering:
    def test_natural(self):
        o = nat(4)
        assert o.order == (0, 1, 2, 3)
        assert o.rank == (0, 1, 2, 3)

    def test_from_order_builds_rank(self):
        o = VertexOrdering.from_order([2, 0, 1])
        assert o.rank == (1, 2, 0)

    def test_from_order_rejects_non_permutation(self):
        with pytest.raises(ContractViolationError):
            VertexOrdering.from_order([0, 0, 1])

    def test_anchored_at_puts_neighbors_first(self):
        g = Graph(5, [(2, 0), (2, 4), (1, 3)])
        o = VertexOrdering.anchored_at(g, 2)
        assert o.order[0] == 2
        assert set(o.order[1:3]) == {0, 4}
        assert set(o.order[3:]) == {1, 3}

    def test_anchored_at_pair(self):
        g = cycle_graph(5)
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 4)
        assert o.order[:3] == (0, 1, 4)

    def test_anchored_at_pair_rejects_non_neighbor(self):
        g = cycle_graph(5)
        with pytest.raises(ContractViolationError):
            VertexOrdering.anchored_at_pair(g, 0, 1, 2)

    def test_least(self):
        o = VertexOrdering.from_order([3, 1, 0, 2])
        assert o.least({0, 1, 2}) == 1


class TestRootedTreeView:
    def test_depth_and_father_maps(self):
        g = path_graph(4)
        t = RootedTreeView(g, nat(4), [(0, 1), (1, 2), (2, 3)])
        assert t.root == 0
        assert t.depth == {0: 0, 1: 1, 2: 2, 3: 3}
        assert t.father == {1: 0, 2: 1, 3: 2}

    def test_root_is_least_by_ordering(self):
        g = path_graph(3)
        t = RootedTreeView(g, VertexOrdering.from_order([2, 1, 0]), [(0, 1), (1, 2)])
        assert t.root == 2
        assert t.depth[0] == 2

    def test_rejects_cycle(self):
        with pytest.raises(ContractViolationError):
            RootedTreeView(k3(), nat(3), [(0, 1), (1, 2), (0, 2)])

    def test_rejects_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(ContractViolationError):
            RootedTreeView(g, nat(4), [(0, 1), (2, 3)])

    def test_rejects_non_graph_edge(self):
        with pytest.raises(ContractViolationError):
            RootedTreeView(path_graph(3), nat(3), [(0, 2)])

    def test_rejects_empty(self):
        with pytest.raises(ContractViolationError):
            RootedTreeView(path_graph(3), nat(3), [])


class TestClosure:
    def test_k3_star_gains_equal_depth_edge(self):
        clo = penrose_closure(k3(), nat(3), [(0, 1), (0, 2)])
        assert clo == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_k3_path_is_fixed_point(self):
        clo = penrose_closure(k3(), nat(3), [(0, 1), (1, 2)])
        assert clo == frozenset({(0, 1), (1, 2)})

    def test_no_chords_means_no_additions(self):
        g = path_graph(4)
        edges = frozenset({(0, 1), (1, 2), (2, 3)})
        assert penrose_closure(g, nat(4), edges) == edges

    def test_father_order_direction(self):
        # path 1-0-2 rooted at 0 under 0<1<2; chord {1,2} sits at equal depth
        clo = penrose_closure(k3(), nat(3), [(0, 1), (0, 2)])
        assert (1, 2) in clo
        # same tree under order 1<0<2 roots at 1, depths 0,1,2: chord skips a level
        o = VertexOrdering.from_order([1, 0, 2])
        clo2 = penrose_closure(k3(), o, [(0, 1), (0, 2)])
        assert clo2 == frozenset({(0, 1), (0, 2)})

    def test_depth_one_apart_uses_father_rank(self):
        # cycle 0-1-3-2-0, tree {01,02,13}: chord {2,3} spans depths 1 and 2
        g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        tree = [(0, 1), (0, 2), (1, 3)]
        # natural order: shallow end 2 comes after father(3) = 1, chord joins
        clo = penrose_closure(g, nat(4), tree)
        assert clo == frozenset({(0, 1), (0, 2), (1, 3), (2, 3)})
        # swap 1 and 2 in the order and the same chord no longer qualifies
        o = VertexOrdering.from_order([0, 2, 1, 3])
        assert penrose_closure(g, o, tree) == frozenset(tree)


class TestPenroseRecognition:
    def test_k3_examples(self):
        assert not is_penrose_tree(k3(), nat(3), [(0, 1), (0, 2)])
        assert is_penrose_tree(k3(), nat(3), [(0, 1), (1, 2)])

    def test_empty_forest_is_penrose(self):
        assert is_penrose_forest(k3(), nat(3), [])

    def test_forest_componentwise(self):
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5)])
        assert is_penrose_forest(g, nat(6), [(0, 1), (1, 2), (3, 4)])
        assert not is_penrose_forest(g, nat(6), [(0, 1), (0, 2), (3, 4)])

    def test_forest_factorization_matches_componentwise_closure(self):
        g = random_graph(7, 0.5, seed=2)
        o = nat(7)
        for forest in enumerate_penrose_forests(g):
            # closure of the whole forest is the union of component closures
            union = frozenset()
            for comp in forest.components:
                union |= penrose_closure(g, o, comp)
            assert union == forest.edges


class TestForestType:
    def test_components_split(self):
        f = Forest.from_edges([(0, 1), (2, 3), (3, 4)])
        assert f.n_trees == 2
        assert frozenset({(2, 3), (3, 4)}) in f.components

    def test_empty_forest(self):
        f = Forest.from_edges([])
        assert f.n_trees == 0
        assert f.vertices == frozenset()

    def test_rejects_cycle(self):
        with pytest.raises(ContractViolationError):
            Forest.from_edges([(0, 1), (1, 2), (0, 2)])


class TestEnumeration:
    def test_k3_forest_counts(self):
        assert penrose_polynomial(k3()).coeffs == (1, 3, 2)

    def test_single_vertex(self):
        assert penrose_polynomial(Graph(1, [])).coeffs == (1,)

    def test_single_edge(self):
        assert penrose_polynomial(Graph(2, [(0, 1)])).coeffs == (1, 1)

    def test_enumeration_matches_polynomial(self):
        g = random_graph(6, 0.6, seed=9)
        counts = {}
        for f in enumerate_penrose_forests(g):
            counts[len(f.edges)] = counts.get(len(f.edges), 0) + 1
        p = penrose_polynomial(g)
        assert counts == {k: p.coeff(k) for k in range(p.degree + 1) if p.coeff(k)}

    def test_forests_unique(self):
        g = random_graph(6, 0.5, seed=31)
        seen = [f.edges for f in enumerate_penrose_forests(g)]
        assert len(seen) == len(set(seen))

    def test_exhaustive_against_brute_force_small(self):
        for n in range(1, 6):
            for g in all_graphs_up_to_iso(n):
                for seed in (0, 1):
                    o = VertexOrdering.from_order(random_ordering(n, seed + 10 * n))
                    got = [f.edges for f in enumerate_penrose_forests(g, o)]
                    want = brute_force_penrose_forests(g, o)
                    assert len(got) == len(set(got))
                    assert set(got) == set(want)

    def test_cap_refused_eagerly(self):
        big = Graph(13, [(i, i + 1) for i in range(12)])
        with pytest.raises(EnumerationCapError):
            enumerate_penrose_forests(big)
        with pytest.raises(EnumerationCapError):
            penrose_polynomial(big)

    def test_counting_bound_forests_majorize(self):
        g = random_graph(6, 0.5, seed=12)
        p = penrose_polynomial(g)
        es = sorted(g.edges)
        for k in range(p.degree + 1):
            all_forests = sum(1 for sub in combinations(es, k) if is_forest_edge_set(sub))
            assert p.coeff(k) <= all_forests


class TestTreesContaining:
    def test_fast_path_matches_brute_force(self):
        for n in (4, 5):
            for g in all_graphs_up_to_iso(n):
                o = nat(n)
                got = list(penrose_trees_containing(g, o, 0))
                want = brute_force_penrose_trees_containing(g, o, 0)
                assert len(got) == len(set(got))
                assert set(got) == set(want)

    def test_general_path_matches_brute_force(self):
        # v is not order-least, so trees re-root as they grow
        for g in all_graphs_up_to_iso(5):
            o = nat(5)
            got = list(penrose_trees_containing(g, o, 3))
            want = brute_force_penrose_trees_containing(g, o, 3)
            assert len(got) == len(set(got))
            assert set(got) == set(want)

    def test_allowed_restriction(self):
        g = complete_graph(5)
        o = nat(5)
        allowed = {0, 1, 2}
        for t in penrose_trees_containing(g, o, 0, allowed=allowed):
            assert {x for e in t for x in e} <= allowed

    def test_subtree_growth_covers_all_trees(self):
        # sanity for the underlying grower: every subtree through v, no dups
        g = random_graph(6, 0.6, seed=5)
        o = nat(6)
        got = list(penrose_trees_containing(g, o, 0))
        assert len(got) == len(set(got))
        brute = brute_force_trees_containing(g, 0)
        penrose_brute = {t for t in brute if not t or is_penrose_tree(g, o, t)}
        assert set(got) == penrose_brute

    def test_v_must_be_allowed(self):
        with pytest.raises(ContractViolationError):
            penrose_trees_containing(k3(), nat(3), 0, allowed={1, 2})


class TestChromaticIdentity:
    def test_k3(self):
        assert chromatic_via_penrose(k3()).coeffs == (0, 2, -3, 1)

    def test_single_edge(self):
        assert chromatic_via_penrose(Graph(2, [(0, 1)])).coeffs == (0, -1, 1)

    def test_c5(self):
        p = chromatic_via_penrose(cycle_graph(5))
        assert p.coeffs == (0, 4, -10, 10, -5, 1)

    def test_matches_oracle_up_to_4_vertices(self):
        for n in range(1, 5):
            for g in all_graphs_up_to_iso(n):
                assert chromatic_via_penrose(g) == chromatic_deletion_contraction(g)

    def test_ordering_invariance(self):
        for seed, g in [(3, random_graph(6, 0.5, seed=21)), (4, cycle_graph(6))]:
            base = penrose_polynomial(g)
            for k in range(5):
                o = VertexOrdering.from_order(random_ordering(g.n, seed * 100 + k))
                assert penrose_polynomial(g, o) == base

    def test_transforms_roundtrip(self):
        g = random_graph(6, 0.5, seed=8)
        p = chromatic_deletion_contraction(g)
        f = chromatic_to_forest(p)
        assert forest_to_chromatic(f, g.n) == p
        assert all(c >= 0 for c in f.coeffs)

    def test_chromatic_to_forest_rejects_non_monic(self):
        with pytest.raises(ValueError):
            chromatic_to_forest(IntPolynomial((0, 2)))


class TestForestPolynomialRoutes:
    def test_routes_agree(self):
        for g in [k3(), cycle_graph(5), random_graph(7, 0.4, seed=13)]:
            assert forest_polynomial(g, method="chromatic") == forest_polynomial(
                g, method="enumeration"
            )

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            forest_polynomial(k3(), method="guess")


class TestRatio:
    def test_single_edge_gives_z(self):
        g = Graph(2, [(0, 1)])
        for u in (0, 1):
            for z in (0.25, -0.1 + 0.2j, 0.05j):
                assert ratio_R(g, u, z) == pytest.approx(z)

    def test_isolated_vertices_give_zero(self):
        g = Graph(2, [])
        assert ratio_R(g, 0, 0.3 + 0.1j) == 0

    def test_k3_at_zero(self):
        assert ratio_R(k3(), 0, 0.0) == 0

    def test_conditioning_error_near_denominator_zero(self):
        g = path_graph(3)
        # removing the end leaves one edge: denominator 1 + z vanishes at -1
        with pytest.raises(ConditioningError) as exc:
            ratio_R(g, 2, -1.0)
        assert exc.value.magnitude <= exc.value.threshold

    def test_vertex_range_checked(self):
        with pytest.raises(ValueError):
            ratio_R(k3(), 7, 0.1)


class TestPartitionScheme:
    def test_k3_passes_with_counts(self):
        rep = verify_partition_scheme(k3())
        assert rep.passed
        # R=V contributes 4 connected spanning sets, each 2-subset one more
        assert rep.edge_sets_checked == 7
        assert rep.counterexample is None

    def test_tree_graph_all_singletons(self):
        rep = verify_partition_scheme(path_graph(5))
        assert rep.passed

    def test_c4_passes(self):
        rep = verify_partition_scheme(cycle_graph(4))
        assert rep.passed

    def test_respects_r_max(self):
        rep2 = verify_partition_scheme(complete_graph(5), r_max=2)
        rep3 = verify_partition_scheme(complete_graph(5), r_max=3)
        assert rep3.subsets_checked > rep2.subsets_checked

    def test_shuffled_ordering_still_passes(self):
        g = random_graph(6, 0.6, seed=17)
        o = VertexOrdering.from_order(random_ordering(6, 99))
        assert verify_partition_scheme(g, o, r_max=5).passed


def _merge_edges(u, pair, forest_edges):
    return set(forest_edges) | {(min(u, v), max(u, v)) for v in pair}


class TestObstruction:
    def test_child_of_first_anchor_blocks(self):
        g = cycle_graph(4)  # u=0, anchors 1 and 3, w=2 adjacent to both
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 3)
        res = obstruction_check(g, o, 0, (1, 3), [(1, 2)])
        assert not res.penrose
        assert res.violated_by == "c"

    def test_disjoint_branches_pass(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 3)])
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 2)
        res = obstruction_check(g, o, 0, (1, 2), [(1, 3)])
        assert res.penrose
        assert res.violated_by is None

    def test_equal_depth_cross_edge(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 2)
        res = obstruction_check(g, o, 0, (1, 2), [(1, 3), (2, 4)])
        assert res.violated_by == "a"

    def test_father_order_cross_edge(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4), (2, 3)])
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 2)
        res = obstruction_check(g, o, 0, (1, 2), [(1, 3), (2, 4)])
        assert res.violated_by == "b"

    def test_empty_forest_rejected(self):
        g = cycle_graph(4)
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 3)
        with pytest.raises(ContractViolationError):
            obstruction_check(g, o, 0, (1, 3), [])

    def test_adjacent_anchors_rejected(self):
        g = k3()
        o = nat(3)
        with pytest.raises(ContractViolationError):
            obstruction_check(g, o, 0, (1, 2), [(1, 2)])

    def test_forest_touching_u_rejected(self):
        g = cycle_graph(4)
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 3)
        with pytest.raises(ContractViolationError):
            obstruction_check(g, o, 0, (1, 3), [(0, 1)])

    def test_anchorless_component_rejected(self):
        g = Graph(6, [(0, 1), (0, 2), (4, 5)])
        o = VertexOrdering.anchored_at_pair(g, 0, 1, 2)
        with pytest.raises(ContractViolationError):
            obstruction_check(g, o, 0, (1, 2), [(4, 5)])

    def test_matches_direct_closure_on_c5(self):
        g = cycle_graph(5)
        checked = 0
        for u in range(5):
            nbrs = sorted(g.adj[u])
            for v1, v2 in combinations(nbrs, 2):
                if g.has_edge(v1, v2):
                    continue
                o = VertexOrdering.anchored_at_pair(g, u, v1, v2)
                others = set(range(5)) - {u}
                for t1 in penrose_trees_containing(g, o, v1, allowed=others - {v2}):
                    t1_verts = {x for e in t1 for x in e} or {v1}
                    for t2 in penrose_trees_containing(
                        g, o, v2, allowed=others - t1_verts
                    ):
                        if not t1 and not t2:
                            continue
                        forest = set(t1) | set(t2)
                        res = obstruction_check(g, o, u, (v1, v2), forest)
                        direct = is_penrose_tree(
                            g, o, _merge_edges(u, (v1, v2), forest)
                        )
                        assert res.penrose == direct
                        checked += 1
        assert checked > 0
