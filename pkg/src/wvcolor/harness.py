"""Seeded instance generation and empirical validation of the structure
theorems, plus the pipeline-vs-oracle differential campaigns.

Every check re-verifies its hypotheses independently of how the instance
was generated: a check never returns "pass" on an instance that fails a
hypothesis (it returns "vacuous" instead), and a FAIL always carries a
serialized counterexample that re-checks from the file alone.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field, replace

from .decomp import find_clique_cutset, is_prime
from .engines import oracle_wvc
from .errors import OracleBudgetExceeded, StructureViolation, WvcError
from .formats import graph_to_dict, graph_from_dict
from .graphs import WeightedGraph, build, validate_coloring
from .patterns import (
    HoleWitness,
    SearchBudgetExceeded,
    find_c5,
    find_hole_at_least,
    find_hole_bounded,
    find_p5,
    find_triad,
    has_triangle,
    hole_neighborhood_class,
    is_free,
)
from .pipelines import CLASS_ORDER, CLASS_PATTERNS, _PIPELINES

# Bounded diagnostic searches: odd holes/antiholes are only probed up to
# PROXY_MAX_HOLE vertices and HOLE_SEARCH_BUDGET nodes; exceeding either
# makes the affected check report "vacuous", never "pass".
HOLE_SEARCH_BUDGET = 500_000
PROXY_MAX_HOLE = 9


def _odd_lengths(lo: int) -> set[int]:
    return set(range(lo, PROXY_MAX_HOLE + 1, 2))


# ---------------------------------------------------------------------------
# Instance generation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenSpec:
    """Deterministic instance recipe: identical spec => identical graph."""

    n: int
    p: float
    seed: int
    class_filter: tuple[str, ...] = ()
    require_prime: bool = False
    max_weight: int = 1
    max_attempts: int = 200
    profile: str | None = None      # tuned structured-instance mixture


def _er_edges(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def _random_weights(rng: random.Random, n: int, max_weight: int) -> list[int]:
    if max_weight <= 1:
        return [1] * n
    return [rng.randint(1, max_weight) for _ in range(n)]


def _family_hole(rng: random.Random, lo: int, hi: int) -> tuple[int, list]:
    ell = rng.randint(lo, hi)
    return ell, [(i, (i + 1) % ell) for i in range(ell)]


def _family_bipartite(rng: random.Random, n: int, p: float) -> tuple[int, list]:
    n = max(n, 4)
    a = rng.randint(2, n - 2)
    edges = [
        (i, j)
        for i in range(a)
        for j in range(a, n)
        if rng.random() < p
    ]
    return n, edges


def _family_crown(rng: random.Random) -> tuple[int, list]:
    # K_{a,a} minus a perfect matching: prime, fork-free, bipartite, has C6.
    a = rng.randint(3, 5)
    edges = [(i, a + j) for i in range(a) for j in range(a) if i != j]
    return 2 * a, edges


def _family_multipartite(rng: random.Random, max_n: int) -> tuple[int, list]:
    # Complete multipartite graphs sit inside all four classes (their
    # complements are disjoint unions of cliques, which contain none of
    # co-dart/hammer/bull/co-fork); they exercise the series/prime
    # recombination at full size.
    parts: list[int] = []
    total = 0
    while total < max_n:
        s = rng.randint(1, min(4, max_n - total))
        parts.append(s)
        total += s
        if len(parts) >= 5 and rng.random() < 0.5:
            break
    bounds = []
    acc = 0
    for s in parts:
        bounds.append((acc, acc + s))
        acc += s
    edges = []
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return total, edges


def _family_blown_cycle(rng: random.Random, max_n: int) -> tuple[int, list]:
    # Blow-ups of cycles stay (fork,bull)-free; after modular contraction
    # they exercise the weighted-hole branch end to end.
    ell = rng.choice((5, 6, 7, 8))
    mult = [1] * ell
    budget = max_n - ell
    for i in range(ell):
        if budget <= 0:
            break
        extra = rng.randint(0, min(1, budget))
        mult[i] += extra
        budget -= extra
    bounds = []
    acc = 0
    for s in mult:
        bounds.append(list(range(acc, acc + s)))
        acc += s
    edges = []
    for i in range(ell):
        group = bounds[i]
        edges.extend((u, v) for k, u in enumerate(group) for v in group[k + 1:])
        for u in group:
            edges.extend((u, v) for v in bounds[(i + 1) % ell])
    return acc, edges


def _family_decorated_hole(rng: random.Random, lo: int, hi: int) -> tuple[int, list]:
    ell = rng.randint(lo, hi)
    edges = [(i, (i + 1) % ell) for i in range(ell)]
    extra = rng.randint(1, 2)
    n = ell
    for _ in range(extra):
        x = n
        n += 1
        mode = rng.randrange(3)
        if mode == 0:       # full
            edges.extend((x, i) for i in range(ell))
        elif mode == 1:     # consecutive triple
            i = rng.randrange(ell)
            edges.extend((x, j % ell) for j in (i - 1, i, i + 1))
        else:               # sparse stable subset of the rim
            for i in range(0, ell, 2):
                if rng.random() < 0.4:
                    edges.append((x, i))
    return n, edges


def _family_decorated_c5(rng: random.Random) -> tuple[int, list]:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    n = 5
    patterns = (
        lambda i: [(i - 1) % 5, (i + 1) % 5],                 # W_i
        lambda i: [(i - 1) % 5, i, (i + 1) % 5],              # X_i
        lambda i: [i, (i + 1) % 5, (i + 3) % 5],              # Y_i
        lambda i: [j for j in range(5) if j != i],            # Z_i
        lambda i: list(range(5)),                             # T
    )
    extras = rng.randint(1, 3)
    added = []
    for _ in range(extras):
        x = n
        n += 1
        pick = patterns[rng.randrange(len(patterns))]
        edges.extend((x, v) for v in pick(rng.randrange(5)))
        for y in added:
            if rng.random() < 0.5:
                edges.append((x, y))
        added.append(x)
    return n, edges


def _family_decorated_p5(rng: random.Random) -> tuple[int, list]:
    edges = [(i, i + 1) for i in range(4)]
    n = 5
    shapes = ([0], [4], [0, 1], [3, 4], [0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 2, 4])
    added = []
    for _ in range(rng.randint(1, 3)):
        x = n
        n += 1
        edges.extend((x, v) for v in shapes[rng.randrange(len(shapes))])
        for y in added:
            if rng.random() < 0.4:
                edges.append((x, y))
        added.append(x)
    return n, edges


def _family_net(rng: random.Random) -> tuple[int, list]:
    # Triangle with three pendant tips: prime, keeps its triangle, and the
    # short tails dodge the tailed-triangle patterns.
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]
    n = 6
    if rng.random() < 0.5:
        x = n
        n += 1
        for t in (3, 4, 5):
            if rng.random() < 0.5:
                edges.append((x, t))
    return n, edges


def _family_overlapping_triangles(rng: random.Random) -> tuple[int, list]:
    # A fan of overlapping triangles with two tips: one of the few prime
    # triangle-bearing shapes that dodges both the house and the bull.
    edges = [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 5), (2, 3), (2, 4), (3, 4)]
    n = 6
    if rng.random() < 0.4:
        x = n
        n += 1
        for t in range(6):
            if rng.random() < 0.4:
                edges.append((x, t))
    return n, edges


def _family_p5_wings(rng: random.Random) -> tuple[int, list]:
    # P5 plus two non-adjacent near-dominating vertices: prime, cutset-free,
    # no long hole, so the stable-class case of the P5 theorem is live.
    edges = [(0, 1), (1, 2), (2, 3), (3, 4),
             (5, 0), (5, 1), (5, 2), (5, 4),
             (6, 0), (6, 2), (6, 3), (6, 4)]
    n = 7
    if rng.random() < 0.5:      # optional extra pendant-ish decoration
        x = n
        n += 1
        shapes = ([0], [4], [0, 1], [3, 4])
        edges.extend((x, v) for v in shapes[rng.randrange(len(shapes))])
    return n, edges


def _profile_candidate(rng: random.Random, spec: GenSpec) -> tuple[int, list]:
    """One raw candidate (n, edges) for the given profile."""
    prof = spec.profile
    n, p = spec.n, spec.p
    if prof is None:
        return n, _er_edges(rng, n, p)
    roll = rng.random()
    if prof == "t11":
        if roll < 0.25:
            return _family_hole(rng, 6, max(6, min(n, 10)))
        if roll < 0.40:
            return _family_crown(rng)
        if roll < 0.70:
            return _family_bipartite(rng, n, 0.5 + 0.3 * rng.random())
        return n, _er_edges(rng, n, p)
    if prof == "t12":
        if roll < 0.2:
            k = rng.randint(5, 9)
            return k, [(i, i + 1) for i in range(k - 1)]
        if roll < 0.4:
            return _family_p5_wings(rng)
        if roll < 0.65:
            return _family_decorated_p5(rng)
        return n, _er_edges(rng, n, p)
    if prof == "t3":
        if roll < 0.35:
            return _family_hole(rng, 7, 9)
        if roll < 0.55:
            return _family_decorated_hole(rng, 7, 9)
        return n, _er_edges(rng, n, p)
    if prof == "t5":
        if roll < 0.45:
            return _family_decorated_c5(rng)
        if roll < 0.55:
            return 5, [(i, (i + 1) % 5) for i in range(5)]
        return n, _er_edges(rng, n, p)
    if prof == "t8":
        if roll < 0.2:
            return _family_hole(rng, 5, 8)
        if roll < 0.35:
            return _family_bipartite(rng, n, p + 0.2)
        if roll < 0.55:
            return _family_net(rng)
        return n, _er_edges(rng, n, rng.choice((p, 0.3, 0.45)))
    if prof == "t10":
        if roll < 0.2:
            return _family_hole(rng, 5, 8)
        if roll < 0.35:
            return _family_bipartite(rng, n, p + 0.2)
        if roll < 0.6:
            return _family_overlapping_triangles(rng)
        return n, _er_edges(rng, n, p)
    if prof == "bfnh":
        if roll < 0.3:
            return _family_decorated_hole(rng, 6, 9)
        if roll < 0.55:
            return _family_bipartite(rng, n, 0.4 + 0.3 * rng.random())
        return n, _er_edges(rng, n, p)
    if prof in CLASS_PATTERNS:
        # class-instance mixture for differential campaigns
        if prof == "forkbull":
            if roll < 0.10:
                return _family_hole(rng, 5, max(6, min(n, 9)))
            if roll < 0.20:
                k = rng.randint(4, max(5, min(n, 9)))
                return k, [(i, i + 1) for i in range(k - 1)]
            if roll < 0.30:
                return _family_bipartite(rng, n, 0.4 + 0.4 * rng.random())
            if roll < 0.40:
                return _family_p5_wings(rng)
            if roll < 0.52:
                return _family_blown_cycle(rng, n)
            if roll < 0.62:
                return _family_multipartite(rng, n)
            return n, _er_edges(rng, n, rng.choice((0.25, 0.4, 0.55, 0.7)))
        if roll < 0.08:
            return 5, [(i, (i + 1) % 5) for i in range(5)]
        if roll < 0.30:
            return _family_multipartite(rng, n)
        return (
            rng.randint(max(4, n - 6), n),
            None,  # filled below with a fresh density draw
        )
    raise WvcError(f"unknown generator profile {prof!r}")


def generate(spec: GenSpec) -> WeightedGraph | None:
    """Rejection-sampled seeded instance, or None when attempts run out."""
    rng = random.Random(spec.seed)
    for _ in range(spec.max_attempts):
        n, edges = _profile_candidate(rng, spec)
        if edges is None:
            edges = _er_edges(rng, n, rng.choice((0.3, 0.45, 0.6, 0.75)))
        weights = _random_weights(rng, n, spec.max_weight)
        try:
            g = build(n, edges, weights)
        except WvcError:
            continue
        if spec.class_filter:
            ok, _ = is_free(g, spec.class_filter)
            if not ok:
                continue
        if spec.require_prime and not is_prime(g):
            continue
        return g
    return None


# ---------------------------------------------------------------------------
# The C5 neighborhood partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class C5Partition:
    """Outside-vertex classification against a 5-cycle (position-indexed)."""

    cycle: tuple[int, ...]
    w: tuple[frozenset[int], ...]
    x: tuple[frozenset[int], ...]
    y: tuple[frozenset[int], ...]
    z: tuple[frozenset[int], ...]
    t: frozenset[int]
    r: frozenset[int]
    unclassified: frozenset[int]

    def w_union(self) -> frozenset[int]:
        return frozenset().union(*self.w)

    def y_union(self) -> frozenset[int]:
        return frozenset().union(*self.y)


def c5_partition(g: WeightedGraph, c: HoleWitness) -> C5Partition:
    """Classify every vertex outside the C5 by its neighborhood on it."""
    if c.length != 5:
        raise WvcError("c5_partition needs a witness of length exactly 5")
    cyc = c.vertices
    pos = {v: i for i, v in enumerate(cyc)}
    w = [set() for _ in range(5)]
    x = [set() for _ in range(5)]
    y = [set() for _ in range(5)]
    z = [set() for _ in range(5)]
    t: set[int] = set()
    r: set[int] = set()
    unclassified: set[int] = set()
    cset = set(cyc)
    for v in range(g.n):
        if v in cset:
            continue
        hits = frozenset(pos[u] for u in cyc if g.has_edge(v, u))
        if len(hits) == 0:
            r.add(v)
        elif len(hits) == 5:
            t.add(v)
        elif len(hits) == 4:
            (miss,) = set(range(5)) - hits
            z[miss].add(v)
        elif len(hits) == 3:
            placed = False
            for i in range(5):
                if hits == frozenset(((i - 1) % 5, i, (i + 1) % 5)):
                    x[i].add(v)
                    placed = True
                    break
                if hits == frozenset((i, (i + 1) % 5, (i + 3) % 5)):
                    y[i].add(v)
                    placed = True
                    break
            if not placed:
                unclassified.add(v)
        elif len(hits) == 2:
            placed = False
            for i in range(5):
                if hits == frozenset(((i - 1) % 5, (i + 1) % 5)):
                    w[i].add(v)
                    placed = True
                    break
            if not placed:
                unclassified.add(v)
        else:
            unclassified.add(v)
    return C5Partition(
        cyc,
        tuple(frozenset(s) for s in w),
        tuple(frozenset(s) for s in x),
        tuple(frozenset(s) for s in y),
        tuple(frozenset(s) for s in z),
        frozenset(t),
        frozenset(r),
        frozenset(unclassified),
    )


# ---------------------------------------------------------------------------
# Structure checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    theorem: str
    verdict: str                 # "pass" | "vacuous" | "FAIL"
    detail: str = ""
    witness: dict | None = None


def _vac(theorem: str, why: str) -> StructureReport:
    return StructureReport(theorem, "vacuous", why)


def _fail(theorem: str, g: WeightedGraph, why: str, extra: dict | None = None) -> StructureReport:
    doc = {"theorem": theorem, "reason": why, "graph": graph_to_dict(g)}
    if extra:
        doc.update(extra)
    return StructureReport(theorem, "FAIL", why, doc)


def _passes(theorem: str, detail: str = "") -> StructureReport:
    return StructureReport(theorem, "pass", detail)


def _check_t3(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("house", "co-dart"))
    if not ok:
        return _vac("T3", f"contains {hit[0]}")
    if not is_prime(g):
        return _vac("T3", "not prime")
    try:
        hole = find_hole_bounded(g, _odd_lengths(7), HOLE_SEARCH_BUDGET)
    except SearchBudgetExceeded:
        return _vac("T3", "odd-hole search budget exhausted")
    if hole is None:
        return _vac("T3", "no odd hole of length 7..9 found")
    if has_triangle(g):
        return _fail("T3", g, "triangle coexists with a long odd hole",
                     {"hole": list(hole)})
    return _passes("T3")


def _check_t5(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("P5", "dart"))
    if not ok:
        return _vac("T5", f"contains {hit[0]}")
    if not is_prime(g):
        return _vac("T5", "not prime")
    c5 = find_c5(g)
    if c5 is None:
        return _vac("T5", "no induced C5")
    if g.n <= 18:
        return _passes("T5", "small alternative (<= 18 vertices)")
    if find_triad(g) is None:
        return _passes("T5", "triad-free alternative")
    return _fail("T5", g, "more than 18 vertices and a triad",
                 {"c5": list(c5.vertices)})


def _perfection_proxy(g: WeightedGraph) -> tuple[bool, str, dict | None]:
    """Bounded refutation search: odd holes/antiholes <= 9 plus a chi=omega
    spot check.  Returns (verified, note, counterexample-extra)."""
    try:
        hole = find_hole_bounded(g, _odd_lengths(5), HOLE_SEARCH_BUDGET)
    except SearchBudgetExceeded:
        return False, "hole search budget exhausted", None
    if hole is not None:
        return False, f"odd hole of length {len(hole)}", {"hole": list(hole)}
    co = g.complement()
    try:
        antihole = find_hole_bounded(co, _odd_lengths(7), HOLE_SEARCH_BUDGET)
    except SearchBudgetExceeded:
        return False, "antihole search budget exhausted", None
    if antihole is not None:
        return False, f"odd antihole of length {len(antihole)}", {"antihole": list(antihole)}
    unit = WeightedGraph(g.n, g.adj, (1,) * g.n)
    from .graphs import max_weight_clique

    chi = oracle_wvc(unit).class_count
    _, omega = max_weight_clique(unit)
    if chi != omega:
        return False, f"chi {chi} != omega {omega}", {"chi": chi, "omega": omega}
    return True, "no short odd hole/antihole; chi = omega", None


def _check_t8(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("hammer", "house"))
    if not ok:
        return _vac("T8", f"contains {hit[0]}")
    if not is_prime(g):
        return _vac("T8", "not prime")
    if not has_triangle(g):
        return _passes("T8", "triangle-free alternative")
    verified, note, extra = _perfection_proxy(g)
    if verified:
        return _passes("T8", f"perfect (proxy): {note}")
    if extra is None:
        return _vac("T8", note)
    return _fail("T8", g, f"has a triangle and is not perfect ({note})", extra)


def _check_t10(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("house", "bull"))
    if not ok:
        return _vac("T10", f"contains {hit[0]}")
    if not is_prime(g):
        return _vac("T10", "not prime")
    if not has_triangle(g):
        return _passes("T10", "triangle-free alternative")
    ok, hit = is_free(g, ("P5", "C5"))
    if ok:
        return _passes("T10", "(P5,C5)-free alternative")
    return _fail("T10", g, f"has a triangle and contains {hit[0]}",
                 {"witness": list(hit[1])})


def _check_t11(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("fork", "bull"))
    if not ok:
        return _vac("T11", f"contains {hit[0]}")
    if not is_prime(g):
        return _vac("T11", "not prime")
    hole = find_hole_at_least(g, 6)
    if hole is None:
        return _vac("T11", "no hole of length >= 6")
    if g.n == hole.length and g.edge_count() == g.n:
        return _passes("T11", f"graph is the hole itself (length {hole.length})")
    if g.bipartition() is not None:
        return _passes("T11", "bipartite alternative")
    return _fail("T11", g, "neither the hole itself nor bipartite",
                 {"hole": list(hole.vertices)})


def _check_t12(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("fork", "bull"))
    if not ok:
        return _vac("T12", f"contains {hit[0]}")
    if not is_prime(g):
        return _vac("T12", "not prime")
    if find_hole_at_least(g, 6) is not None:
        return _vac("T12", "has a hole of length >= 6")
    p5 = find_p5(g)
    if p5 is None:
        return _vac("T12", "no induced P5")
    # Conclusion is a disjunction; test the color-class equation first so it
    # is exercised on every instance, fall back to the cutset alternative.
    unit = WeightedGraph(g.n, g.adj, (1,) * g.n)
    s = (p5[0], p5[2], p5[4])
    rest, _ = unit.induced([v for v in range(g.n) if v not in s])
    try:
        chi_full = oracle_wvc(unit).class_count
        chi_rest = oracle_wvc(rest).class_count
    except OracleBudgetExceeded:
        return _vac("T12", "oracle budget exhausted")
    if chi_full == chi_rest + 1:
        return _passes("T12", "stable class {v1,v3,v5} attains chi")
    if g.n >= 2 and find_clique_cutset(g) is not None:
        return _passes("T12", "clique cutset alternative")
    return _fail(
        "T12", g,
        f"no clique cutset and chi {chi_full} != chi(G-S)+1 = {chi_rest + 1}",
        {"p5": list(p5)},
    )


def _check_bfnh(g: WeightedGraph) -> StructureReport:
    ok, hit = is_free(g, ("bull",))
    if not ok:
        return _vac("BFNH", "contains bull")
    hole = find_hole_at_least(g, 6)
    if hole is None:
        return _vac("BFNH", "no hole of length >= 6")
    for x in range(g.n):
        if x in hole.vertices:
            continue
        cls = hole_neighborhood_class(g, hole, x)
        if cls.kind == "other":
            return _fail("BFNH", g, f"vertex {x} has an excluded hole neighborhood",
                         {"hole": list(hole.vertices), "vertex": x})
        if cls.kind == "triple-plus" and hole.length != 6:
            return _fail("BFNH", g, f"triple-plus neighborhood on a hole of length "
                         f"{hole.length}", {"hole": list(hole.vertices), "vertex": x})
    return _passes("BFNH")


def _t5_property(name: str, prop) -> callable:
    def check(g: WeightedGraph) -> StructureReport:
        ok, hit = is_free(g, ("P5", "dart"))
        if not ok:
            return _vac(name, f"contains {hit[0]}")
        if not is_prime(g):
            return _vac(name, "not prime")
        c5 = find_c5(g)
        if c5 is None:
            return _vac(name, "no induced C5")
        part = c5_partition(g, c5)
        why = prop(g, part)
        if why is None:
            return _passes(name)
        return _fail(name, g, why, {"c5": list(c5.vertices)})

    return check


def _prop_w_stable(g: WeightedGraph, part: C5Partition) -> str | None:
    for i in range(5):
        if not g.is_stable(part.w[i]):
            return f"W_{i} is not a stable set"
    return None


def _prop_y_small(g: WeightedGraph, part: C5Partition) -> str | None:
    total = len(part.y_union())
    return None if total <= 2 else f"|Y| = {total} > 2"


def _prop_r_small(g: WeightedGraph, part: C5Partition) -> str | None:
    return None if len(part.r) <= 1 else f"|R| = {len(part.r)} > 1"


def _prop_w_bounded(g: WeightedGraph, part: C5Partition) -> str | None:
    for i in range(5):
        if len(part.w[i]) > 2:
            return f"|W_{i}| = {len(part.w[i])} > 2"
    return None


def _prop_cxz_triadfree(g: WeightedGraph, part: C5Partition) -> str | None:
    keep = set(part.cycle)
    for i in range(5):
        keep |= part.x[i] | part.z[i]
    sub, _ = g.induced(keep)
    return None if find_triad(sub) is None else "C u X u Z contains a triad"


def _make_diff_check(label: str):
    def check(g: WeightedGraph) -> StructureReport:
        name = f"DIFF-{label.upper()}"
        ok, hit = is_free(g, CLASS_PATTERNS[label])
        if not ok:
            return _vac(name, f"contains {hit[0]}")
        try:
            want = oracle_wvc(g).class_count
        except OracleBudgetExceeded:
            return _vac(name, "oracle budget exhausted")
        try:
            col, _trace = _PIPELINES[label](g)
        except StructureViolation as exc:
            return _fail(name, g, f"pipeline raised structure violation: {exc}",
                         {"violation": exc.rule})
        verdict = validate_coloring(g, col)
        if not verdict:
            return _fail(name, g, f"certificate invalid: {verdict.reason}")
        if col.class_count != want:
            return _fail(name, g,
                         f"pipeline chi_w {col.class_count} != oracle {want}")
        return _passes(name)

    return check


CHECKS: dict[str, callable] = {
    "T3": _check_t3,
    "T5": _check_t5,
    "T8": _check_t8,
    "T10": _check_t10,
    "T11": _check_t11,
    "T12": _check_t12,
    "BFNH": _check_bfnh,
    "T5P2": _t5_property("T5P2", _prop_w_stable),
    "T5P4C": _t5_property("T5P4C", _prop_y_small),
    "T5P7C": _t5_property("T5P7C", _prop_r_small),
    "T5P8": _t5_property("T5P8", _prop_w_bounded),
    "T5P9": _t5_property("T5P9", _prop_cxz_triadfree),
}
for _label in CLASS_ORDER:
    CHECKS[f"DIFF-{_label.upper()}"] = _make_diff_check(_label)


def check_structure(theorem: str, g: WeightedGraph) -> StructureReport:
    """Run one theorem check on one instance."""
    key = theorem.upper()
    if key not in CHECKS:
        raise WvcError(f"unknown theorem id {theorem!r}; known: {sorted(CHECKS)}")
    return CHECKS[key](g)


# Default tuned generator per check id.
PRESETS: dict[str, GenSpec] = {
    "T3": GenSpec(n=9, p=0.18, seed=0, class_filter=("house", "co-dart"),
                  require_prime=True, profile="t3"),
    "T5": GenSpec(n=9, p=0.5, seed=0, class_filter=("P5", "dart"),
                  require_prime=True, profile="t5"),
    "T8": GenSpec(n=9, p=0.22, seed=0, class_filter=("hammer", "house"),
                  require_prime=True, profile="t8"),
    "T10": GenSpec(n=9, p=0.22, seed=0, class_filter=("house", "bull"),
                   require_prime=True, profile="t10"),
    "T11": GenSpec(n=9, p=0.3, seed=0, class_filter=("fork", "bull"),
                   require_prime=True, profile="t11"),
    "T12": GenSpec(n=8, p=0.35, seed=0, class_filter=("fork", "bull"),
                   require_prime=True, profile="t12"),
    "BFNH": GenSpec(n=10, p=0.25, seed=0, class_filter=("bull",), profile="bfnh"),
}
for _name in ("T5P2", "T5P4C", "T5P7C", "T5P8", "T5P9"):
    PRESETS[_name] = PRESETS["T5"]
for _label in CLASS_ORDER:
    PRESETS[f"DIFF-{_label.upper()}"] = GenSpec(
        n=12, p=0.5, seed=0, class_filter=CLASS_PATTERNS[_label],
        max_weight=3, profile=_label,
    )


def preset_for(theorem: str, seed: int = 0) -> GenSpec:
    key = theorem.upper()
    if key not in PRESETS:
        raise WvcError(f"no generator preset for {theorem!r}")
    return replace(PRESETS[key], seed=seed)


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------


@dataclass
class CheckSummary:
    theorem: str
    passes: int = 0
    vacuous: int = 0
    fails: int = 0
    vacuity_reasons: dict = field(default_factory=dict)
    witness_files: list = field(default_factory=list)

    @property
    def trials(self) -> int:
        return self.passes + self.vacuous + self.fails

    @property
    def non_vacuous_rate(self) -> float:
        return 0.0 if self.trials == 0 else (self.passes + self.fails) / self.trials

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "pass": self.passes,
            "vacuous": self.vacuous,
            "FAIL": self.fails,
            "non_vacuous_rate": round(self.non_vacuous_rate, 4),
            "vacuity_reasons": dict(sorted(self.vacuity_reasons.items())),
            "witness_files": list(self.witness_files),
        }


@dataclass
class CampaignResult:
    seed: int
    trials: int
    generation_failures: int
    summaries: list

    def failed(self) -> bool:
        return any(s.fails for s in self.summaries)

    def warnings(self) -> list[str]:
        # generator bug detector: a check that never left vacuity is suspect
        return [
            f"{s.theorem}: zero passes over {s.trials} trials (all vacuous)"
            for s in self.summaries
            if s.trials > 0 and s.passes == 0 and s.fails == 0
        ]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "generation_failures": self.generation_failures,
            "warnings": self.warnings(),
            "checks": [s.to_dict() for s in self.summaries],
        }


def trial_seed(campaign_seed: int, trial: int) -> int:
    return campaign_seed * 1_000_003 + trial


def campaign(
    spec: GenSpec,
    checks: list[str],
    trials: int,
    out_dir: str | None = None,
) -> CampaignResult:
    """Generate/check loop; aggregates verdicts, serializes any FAIL."""
    keys = [c.upper() for c in checks]
    for key in keys:
        if key not in CHECKS:
            raise WvcError(f"unknown theorem id {key!r}")
    summaries = {key: CheckSummary(key) for key in keys}
    generation_failures = 0
    for t in range(trials):
        sub = replace(spec, seed=trial_seed(spec.seed, t))
        g = generate(sub)
        if g is None:
            generation_failures += 1
            for key in keys:
                s = summaries[key]
                s.vacuous += 1
                s.vacuity_reasons["generation-exhausted"] = (
                    s.vacuity_reasons.get("generation-exhausted", 0) + 1
                )
            continue
        for key in keys:
            report = CHECKS[key](g)
            s = summaries[key]
            if report.verdict == "pass":
                s.passes += 1
            elif report.verdict == "vacuous":
                s.vacuous += 1
                s.vacuity_reasons[report.detail] = (
                    s.vacuity_reasons.get(report.detail, 0) + 1
                )
            else:
                s.fails += 1
                if out_dir is not None:
                    path = _write_witness(out_dir, key, t, sub, report)
                    s.witness_files.append(path)
    result = CampaignResult(spec.seed, trials, generation_failures,
                            [summaries[k] for k in keys])
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        name = f"campaign_{'_'.join(keys)}_seed{spec.seed}.json"
        with open(os.path.join(out_dir, name), "w", encoding="utf-8") as fh:
            fh.write(json.dumps(result.to_dict(), sort_keys=True, indent=2) + "\n")
    return result


def _write_witness(out_dir: str, key: str, trial: int, spec: GenSpec,
                   report: StructureReport) -> str:
    os.makedirs(out_dir, exist_ok=True)
    doc = dict(report.witness or {})
    doc.setdefault("theorem", key)
    doc["trial"] = trial
    doc["instance_seed"] = spec.seed
    doc["detail"] = report.detail
    path = os.path.join(out_dir, f"fail_{key}_{trial}.json")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return path


def recheck_witness(doc: dict) -> StructureReport:
    """Re-run the failed check from a serialized counterexample alone."""
    g = graph_from_dict(doc["graph"])
    return check_structure(doc["theorem"], g)
