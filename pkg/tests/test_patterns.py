from __future__ import annotations

import itertools
import random

import pytest

from conftest import random_graph, seeded_graphs
from oracles import (
    brute_find_induced,
    brute_has_hole_at_least,
    brute_holes_by_permutation,
)

from wvcolor.graphs import build, complete, cycle, empty, path
from wvcolor.patterns import (
    CATALOG,
    HoleWitness,
    find_c5,
    find_hole_at_least,
    find_induced,
    find_p5,
    find_triad,
    has_triad,
    has_triangle,
    hole_neighborhood_class,
    is_free,
    is_hole,
)


def degseq(g):
    return tuple(sorted(g.degree(v) for v in range(g.n)))


class TestCatalog:
    def test_degree_sequences(self):
        expect = {
            "dart": (1, 2, 2, 3, 4),
            "banner": (1, 2, 2, 2, 3),
            "bull": (1, 1, 2, 3, 3),
            "fork": (1, 1, 1, 2, 3),
            "house": (2, 2, 2, 3, 3),
            "hammer": (1, 2, 2, 2, 3),
            "gem": (2, 2, 3, 3, 4),
            "co-dart": (0, 1, 2, 2, 3),
        }
        for name, seq in expect.items():
            assert degseq(CATALOG[name].graph) == seq, name

    def test_complement_definitions(self):
        assert CATALOG["house"].graph == CATALOG["P5"].graph.complement()
        assert CATALOG["hammer"].graph == CATALOG["banner"].graph.complement()
        assert CATALOG["co-dart"].graph == CATALOG["dart"].graph.complement()

    def test_bull_self_complementary(self):
        bull = CATALOG["bull"].graph
        assert find_induced(bull.complement(), "bull") is not None

    def test_unknown_pattern(self):
        with pytest.raises(KeyError, match="unknown pattern"):
            find_induced(cycle(5), "zigzag")


class TestFindInduced:
    def test_identity_embedding(self):
        dart = CATALOG["dart"].graph
        assert find_induced(dart, "dart") == (0, 1, 2, 3, 4)

    def test_c5_has_no_bull(self):
        assert find_induced(cycle(5), "bull") is None

    def test_c6_contains_p5(self):
        emb = find_induced(cycle(6), "P5")
        assert emb is not None and len(emb) == 5

    def test_complete_graphs_have_no_sparse_patterns(self):
        ok, _ = is_free(complete(5), ("fork", "bull"))
        assert ok

    def test_is_free_witness(self):
        ok, hit = is_free(path(5), ("P5",))
        assert not ok and hit == ("P5", (0, 1, 2, 3, 4))

    def test_c5_is_p5_dart_free(self):
        ok, _ = is_free(cycle(5), ("P5", "dart"))
        assert ok

    def test_agrees_with_tuple_enumeration_on_random_graphs(self):
        rng = random.Random(5150)
        names = [n for n, p in CATALOG.items() if p.graph.n <= 5]
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 6), rng.choice((0.3, 0.5, 0.7)))
            for name in names:
                want = brute_find_induced(g, CATALOG[name].graph)
                assert find_induced(g, name) == want, (name, g.edges())


class TestTriangleTriad:
    def test_c5(self):
        assert not has_triangle(cycle(5)) and not has_triad(cycle(5))

    def test_c6_triad(self):
        assert has_triad(cycle(6))

    def test_k3(self):
        assert has_triangle(complete(3)) and not has_triad(complete(3))

    def test_find_triad_witness(self):
        t = find_triad(empty(3))
        assert t == (0, 1, 2)

    def test_against_definition(self):
        rng = random.Random(77)
        for _ in range(80):
            g = random_graph(rng, rng.randint(0, 7), rng.random())
            want_triangle = any(
                g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
                for a, b, c in itertools.combinations(range(g.n), 3)
            )
            want_triad = any(
                not g.has_edge(a, b) and not g.has_edge(b, c) and not g.has_edge(a, c)
                for a, b, c in itertools.combinations(range(g.n), 3)
            )
            assert has_triangle(g) == want_triangle
            assert has_triad(g) == want_triad


class TestHoleDetection:
    def test_c6(self):
        h = find_hole_at_least(cycle(6))
        assert h is not None and h.length == 6 and is_hole(cycle(6), h.vertices)

    def test_c5_absent(self):
        assert find_hole_at_least(cycle(5)) is None

    def test_c7(self):
        h = find_hole_at_least(cycle(7))
        assert h is not None and h.length == 7

    def test_only_lmin_six_supported(self):
        with pytest.raises(ValueError):
            find_hole_at_least(cycle(7), 7)

    def test_witness_is_always_a_hole(self):
        for g in seeded_graphs(31, 120, 9):
            h = find_hole_at_least(g)
            if h is not None:
                assert h.length >= 6
                assert is_hole(g, h.vertices)

    def test_against_exhaustive_search(self):
        for g in seeded_graphs(37, 250, 9, densities=(0.15, 0.25, 0.35, 0.5)):
            assert (find_hole_at_least(g) is not None) == brute_has_hole_at_least(g, 6)

    def test_exhaustive_searchers_agree_with_permutations(self):
        # layered cross-check of the test oracle itself, small n only
        for g in seeded_graphs(41, 60, 7, densities=(0.2, 0.35, 0.5)):
            got = brute_has_hole_at_least(g, 6)
            want = brute_holes_by_permutation(g, (6, 7))
            assert got == want


class TestC5P5Witnesses:
    def test_c5_itself(self):
        w = find_c5(cycle(5))
        assert w is not None and w.vertices == (0, 1, 2, 3, 4)

    def test_star_has_neither(self):
        star = build(5, [(0, i) for i in range(1, 5)])
        assert find_c5(star) is None and find_p5(star) is None

    def test_c6_has_p5_not_c5(self):
        assert find_p5(cycle(6)) is not None
        assert find_c5(cycle(6)) is None

    def test_complement_duality(self):
        for g in seeded_graphs(43, 80, 7):
            co = g.complement()
            assert (find_induced(g, "house") is None) == (find_induced(co, "P5") is None)
            assert (find_induced(g, "co-dart") is None) == (find_induced(co, "dart") is None)
            assert (find_induced(g, "hammer") is None) == (find_induced(co, "banner") is None)


class TestHoleNeighborhood:
    def test_wheel_center_full(self):
        g = build(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, i) for i in range(6)])
        assert hole_neighborhood_class(g, HoleWitness((0, 1, 2, 3, 4, 5)), 6).kind == "full"

    def test_pendant_stable(self):
        g = build(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0)])
        assert hole_neighborhood_class(g, HoleWitness((0, 1, 2, 3, 4, 5)), 6).kind == "stable"

    def test_consecutive_triple(self):
        g = build(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 5), (6, 0), (6, 1)])
        got = hole_neighborhood_class(g, HoleWitness((0, 1, 2, 3, 4, 5)), 6)
        assert got.kind == "triple" and got.center == 0

    def test_triple_plus_only_on_six(self):
        g = build(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 5), (6, 0), (6, 1), (6, 3)])
        got = hole_neighborhood_class(g, HoleWitness((0, 1, 2, 3, 4, 5)), 6)
        assert got.kind == "triple-plus" and got.center == 0

    def test_bull_free_lemma_property(self):
        # on bull-free graphs with a long hole, "other" never occurs
        rng = random.Random(6174)
        checked = 0
        while checked < 40:
            g = random_graph(rng, rng.randint(7, 10), rng.choice((0.2, 0.3)))
            ok, _ = is_free(g, ("bull",))
            if not ok:
                continue
            h = find_hole_at_least(g)
            if h is None:
                continue
            checked += 1
            for x in range(g.n):
                if x in h.vertices:
                    continue
                cls = hole_neighborhood_class(g, h, x)
                assert cls.kind != "other"
                if cls.kind == "triple-plus":
                    assert h.length == 6
