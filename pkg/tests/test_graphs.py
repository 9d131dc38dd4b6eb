from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seeded_graphs
from oracles import brute_max_weight_clique

from wvcolor.errors import GraphBuildError
from wvcolor.graphs import (
    build,
    coloring,
    complete,
    cycle,
    empty,
    max_weight_clique,
    path,
    validate_coloring,
)


@st.composite
def graphs(draw, max_n=8, max_weight=3):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pair_count = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << pair_count) - 1 if pair_count else 0))
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> k & 1:
                edges.append((i, j))
            k += 1
    weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    return build(n, edges, weights)


class TestBuild:
    def test_c5(self):
        g = cycle(5)
        assert g.n == 5 and g.edge_count() == 5
        assert all(g.degree(v) == 2 for v in range(5))

    def test_empty_graph(self):
        g = build(0)
        assert g.n == 0 and g.edge_count() == 0

    def test_duplicate_edges_collapse(self):
        g = build(3, [(0, 1), (0, 1), (1, 2)])
        assert g.edge_count() == 2

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphBuildError, match=r"\(0, 3\)"):
            build(3, [(0, 3)])

    def test_rejects_self_loop(self):
        with pytest.raises(GraphBuildError, match="self-loop"):
            build(3, [(1, 1)])

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(GraphBuildError, match="vertex 1"):
            build(2, [], {1: 0})


class TestComplement:
    def test_c5_self_complementary(self):
        co = cycle(5).complement()
        # complement of C5 is again a 5-cycle
        assert co.edge_count() == 5 and all(co.degree(v) == 2 for v in range(5))
        assert co.is_connected()

    def test_k3_to_o3(self):
        assert complete(3).complement().edge_count() == 0

    def test_p4_self_complementary(self):
        co = path(4).complement()
        degs = sorted(co.degree(v) for v in range(4))
        assert degs == [1, 1, 2, 2] and co.is_connected()

    @given(graphs())
    def test_involution(self, g):
        assert g.complement().complement() == g


class TestInduced:
    def test_c5_arc(self):
        sub, vmap = cycle(5).induced({0, 1, 2})
        assert sub.edge_count() == 2 and vmap == (0, 1, 2)

    def test_empty_selection(self):
        sub, vmap = cycle(5).induced(set())
        assert sub.n == 0 and vmap == ()

    def test_c6_arc_is_p5(self):
        sub, _ = cycle(6).induced({0, 1, 2, 3, 4})
        assert sub.edge_count() == 4
        assert sorted(sub.degree(v) for v in range(5)) == [1, 1, 2, 2, 2]


class TestPredicates:
    def test_stable_and_clique(self):
        c5 = cycle(5)
        assert c5.is_stable({0, 2})
        assert not c5.is_stable({0, 1})
        assert complete(4).is_clique({0, 1, 2})
        assert not path(3).is_stable({0, 1})

    @given(graphs(max_n=7))
    def test_clique_is_stable_in_complement(self, g):
        import itertools
        co = g.complement()
        for size in range(g.n + 1):
            for s in itertools.combinations(range(g.n), size):
                assert g.is_clique(s) == co.is_stable(s)


class TestComponents:
    def test_two_k2(self):
        g = build(4, [(0, 1), (2, 3)])
        assert g.components() == (frozenset({0, 1}), frozenset({2, 3}))

    def test_c5_connected(self):
        assert len(cycle(5).components()) == 1

    def test_o3(self):
        assert len(empty(3).components()) == 3


class TestBipartition:
    def test_c6(self):
        a, b = cycle(6).bipartition()
        assert {a, b} == {frozenset({0, 2, 4}), frozenset({1, 3, 5})}

    def test_c5_absent_with_witness(self):
        g = cycle(5)
        assert g.bipartition() is None
        cyc = g.odd_cycle()
        assert cyc is not None and len(cyc) % 2 == 1
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    def test_k1(self):
        a, b = build(1).bipartition()
        assert a == frozenset({0}) and b == frozenset()


class TestBlowUp:
    def test_k1_to_k3(self):
        g, copies = build(1).blow_up({0: 3})
        assert g.n == 3 and g.edge_count() == 3 and copies == ((0, 1, 2),)

    def test_identity(self):
        g = cycle(5)
        blown, _ = g.blow_up([1] * 5)
        assert blown.n == 5 and blown.edge_count() == 5

    def test_c5_one_doubled(self):
        blown, copies = cycle(5).blow_up({0: 2})
        assert blown.n == 6
        a, b = copies[0]
        assert blown.has_edge(a, b)
        # both copies see exactly the old neighbors of vertex 0
        for c in (a, b):
            others = {u for u in range(6) if u not in (a, b) and blown.has_edge(c, u)}
            assert len(others) == 2

    @given(graphs(max_n=6))
    def test_unit_blow_up_is_identity(self, g):
        blown, copies = g.blow_up([1] * g.n)
        assert blown.n == g.n
        assert blown.edges() == g.edges()
        assert copies == tuple((v,) for v in range(g.n))


class TestMaxWeightClique:
    def test_k4(self):
        _, w = max_weight_clique(complete(4))
        assert w == 4

    def test_weighted_c5(self):
        # heaviest of the five edges: derived by enumerating all of them
        g = cycle(5, [2, 1, 1, 1, 1])
        clique, w = max_weight_clique(g)
        assert w == 3 and clique == frozenset({0, 1})

    def test_o3_picks_heaviest_vertex(self):
        _, w = max_weight_clique(empty(3, [1, 5, 2]))
        assert w == 5

    @given(graphs(max_n=7))
    @settings(max_examples=60)
    def test_against_subset_enumeration(self, g):
        _, w = max_weight_clique(g)
        assert w == brute_max_weight_clique(g)


class TestValidateColoring:
    def test_c5_three_classes(self):
        g = cycle(5)
        col = coloring([{0, 2}, {1, 3}, {4}])
        assert validate_coloring(g, col)

    def test_rejects_unstable_class(self):
        v = validate_coloring(complete(2), coloring([{0, 1}]))
        assert not v and "not stable" in v.reason

    def test_rejects_undercoverage(self):
        v = validate_coloring(build(1, [], [2]), coloring([{0}]))
        assert not v and "coverage 1 < weight 2" in v.reason

    def test_coloring_is_clique_cover_of_complement(self):
        for g in seeded_graphs(17, 40, 7, max_weight=2):
            from wvcolor.engines import oracle_wvc
            col = oracle_wvc(g)
            assert validate_coloring(g, col)
            co = g.complement()
            for cls in col.classes:
                assert co.is_clique(cls)

    def test_clique_bound_below_any_valid_coloring(self):
        from wvcolor.engines import oracle_wvc
        for g in seeded_graphs(23, 40, 7, max_weight=3):
            col = oracle_wvc(g)
            _, w = max_weight_clique(g)
            assert col.class_count >= w
