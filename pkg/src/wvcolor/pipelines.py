"""The four class-specific WVC algorithms.

Each pipeline wraps modular decomposition around a prime-block solver
wired exactly along the structure-theorem case splits, and carries a
replayable trace of every routing decision.  Any state the theorems rule
out raises StructureViolation with a serialized counterexample instead
of being absorbed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomp import find_clique_cutset, wvc_by_cblocks, wvc_by_modules
from .engines import (
    DEFAULT_ORACLE_BUDGET,
    bipartite_wvc,
    oracle_wvc,
    perfect_wvc,
    triadfree_wvc,
    weighted_hole_wvc,
)
from .errors import ClassMembershipError, NoSupportedClassError, StructureViolation
from .formats import graph_to_dict
from .graphs import WeightedColoring, WeightedGraph, max_weight_clique
from .patterns import find_c5, find_forbidden, find_hole_at_least, find_p5, has_triad

CLASS_PATTERNS: dict[str, tuple[str, str]] = {
    "p5dart": ("P5", "dart"),
    "p5banner": ("P5", "banner"),
    "p5bull": ("P5", "bull"),
    "forkbull": ("fork", "bull"),
}

CLASS_ORDER = ("p5dart", "p5banner", "p5bull", "forkbull")


@dataclass
class PipelineTrace:
    """Ordered, replayable record of routing decisions."""

    label: str
    events: list[dict] = field(default_factory=list)

    def record(self, step: str, **detail) -> None:
        self.events.append({"step": step, **detail})

    def summary(self) -> list[dict]:
        return list(self.events)


def _require_class(g: WeightedGraph, label: str) -> None:
    hit = find_forbidden(g, CLASS_PATTERNS[label])
    if hit is not None:
        name, emb = hit
        raise ClassMembershipError(label, name, emb)


def _check_root_bound(q: WeightedGraph, col: WeightedColoring, rule: str) -> None:
    """Blocks routed to the perfect engine must close at the clique bound."""
    _, bound = max_weight_clique(q)
    if col.class_count != bound:
        raise StructureViolation(
            rule,
            f"block routed as perfect has chi_w {col.class_count} > clique bound "
            f"{bound}; the structure theorems exclude this",
            payload={"graph": graph_to_dict(q), "chi_w": col.class_count,
                     "clique_bound": bound},
        )


# ---------------------------------------------------------------------------
# (P5, dart)-free / (P5, banner)-free / (P5, bull)-free
# ---------------------------------------------------------------------------


def _triadfree_branch(q: WeightedGraph, trace: PipelineTrace) -> WeightedColoring:
    trace.record("engine", name="triadfree", n=q.n)
    return triadfree_wvc(q)


def _perfect_branch(
    q: WeightedGraph, trace: PipelineTrace, budget: int, rule: str, why: str
) -> WeightedColoring:
    trace.record("engine", name="perfect", n=q.n, why=why)
    col = perfect_wvc(q, budget)
    _check_root_bound(q, col, rule)
    return col


def _p5dart_prime(q: WeightedGraph, trace: PipelineTrace, budget: int) -> WeightedColoring:
    if not has_triad(q):
        return _triadfree_branch(q, trace)
    if q.n <= 18:
        trace.record("engine", name="oracle", n=q.n, why="small prime block")
        return oracle_wvc(q, budget)
    c5 = find_c5(q)
    if c5 is not None:
        raise StructureViolation(
            "p5dart-c5",
            "prime (P5,dart)-free block with more than 18 vertices and a triad "
            "contains a C5; the 18-vertex/triad-free dichotomy excludes this",
            payload={"graph": graph_to_dict(q), "c5": list(c5.vertices)},
        )
    return _perfect_branch(
        q, trace, budget, "p5dart-perfect", "C5-free branch of the dichotomy"
    )


def _p5banner_prime(q: WeightedGraph, trace: PipelineTrace, budget: int) -> WeightedColoring:
    if not has_triad(q):
        return _triadfree_branch(q, trace)
    return _perfect_branch(
        q, trace, budget, "p5banner-perfect",
        "complement is prime (house,hammer)-free with a triangle, hence perfect",
    )


def _p5bull_prime(q: WeightedGraph, trace: PipelineTrace, budget: int) -> WeightedColoring:
    if not has_triad(q):
        return _triadfree_branch(q, trace)
    return _perfect_branch(
        q, trace, budget, "p5bull-perfect",
        "block is (P5,C5,house)-free, hence perfect",
    )


def _modular_pipeline(g, label, prime, budget):
    _require_class(g, label)
    trace = PipelineTrace(label)
    trace.record("modular", n=g.n, total_weight=g.total_weight())
    col = wvc_by_modules(g, lambda q: prime(q, trace, budget))
    trace.record("done", classes=col.class_count)
    return col, trace


def p5dart_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[WeightedColoring, PipelineTrace]:
    """Exact WVC for (P5, dart)-free graphs."""
    return _modular_pipeline(g, "p5dart", _p5dart_prime, node_budget)


def p5banner_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[WeightedColoring, PipelineTrace]:
    """Exact WVC for (P5, banner)-free graphs."""
    return _modular_pipeline(g, "p5banner", _p5banner_prime, node_budget)


def p5bull_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[WeightedColoring, PipelineTrace]:
    """Exact WVC for (P5, bull)-free graphs."""
    return _modular_pipeline(g, "p5bull", _p5bull_prime, node_budget)


# ---------------------------------------------------------------------------
# (fork, bull)-free
# ---------------------------------------------------------------------------

# Allowed neighborhoods on the P5 v1..v5 (1-based positions) for outside
# vertices of a (fork,bull)-free graph with no hole of length >= 6.
_P5_CLASSES: dict[tuple[int, ...], str] = {
    (): "F",
    (1,): "S1",
    (5,): "S5",
    (1, 2): "S12",
    (4, 5): "S45",
    (2, 4): "S24",
    (1, 2, 3): "S123",
    (2, 3, 4): "S234",
    (3, 4, 5): "S345",
    (1, 3, 5): "S135",
    (1, 3, 4, 5): "S1345",
    (1, 2, 3, 5): "S1235",
    (1, 2, 3, 4, 5): "A",
}


@dataclass(frozen=True)
class P5Context:
    """Partition of the vertices outside an induced P5 v1..v5."""

    p5: tuple[int, ...]
    sets: dict
    v_groups: tuple[frozenset[int], ...]   # V1..V5
    a_prime: frozenset[int]

    def stable_class(self) -> frozenset[int]:
        return frozenset((self.p5[0], self.p5[2], self.p5[4]))


def build_p5_context(g: WeightedGraph, p5: tuple[int, ...]) -> P5Context:
    """Classify every outside vertex by its neighborhood on the P5.

    Raises StructureViolation when a vertex fits none of the admissible
    classes, or when the derived V1/V3/V5 fail to be homogeneous or V2
    touches V4 - states impossible for a (fork,bull)-free graph with no
    hole of length >= 6.
    """
    bset = set(p5)
    pos = {v: i + 1 for i, v in enumerate(p5)}
    sets: dict[str, set[int]] = {name: set() for name in _P5_CLASSES.values()}
    for x in range(g.n):
        if x in bset:
            continue
        key = tuple(sorted(pos[u] for u in p5 if g.has_edge(x, u)))
        name = _P5_CLASSES.get(key)
        if name is None:
            raise StructureViolation(
                "fbp-pvg",
                f"vertex {x} sees the P5 at positions {key}, which the "
                "outside-vertex partition excludes",
                payload={"graph": graph_to_dict(g), "p5": list(p5),
                         "vertex": x, "positions": list(key)},
            )
        sets[name].add(x)
    v1 = frozenset({p5[0]} | sets["S12"])
    v2 = frozenset({p5[1]} | sets["S123"])
    v3 = frozenset({p5[2]} | sets["S24"] | sets["S234"])
    v4 = frozenset({p5[3]} | sets["S345"])
    v5 = frozenset({p5[4]} | sets["S45"])
    a_prime = frozenset(sets["A"] | sets["S135"] | sets["S1235"] | sets["S1345"])
    groups = (v1, v2, v3, v4, v5)
    for idx in (0, 2, 4):
        bad = _homogeneity_defect(g, groups[idx])
        if bad is not None:
            raise StructureViolation(
                "fbp-homogeneous",
                f"V{idx + 1} is not a homogeneous set (split by vertex {bad})",
                payload={"graph": graph_to_dict(g), "p5": list(p5),
                         "group": sorted(groups[idx]), "splitter": bad},
            )
    for s in v2:
        for t in v4:
            if g.has_edge(s, t):
                raise StructureViolation(
                    "fbp-v2v4",
                    f"V2 vertex {s} is adjacent to V4 vertex {t}",
                    payload={"graph": graph_to_dict(g), "p5": list(p5),
                             "edge": [s, t]},
                )
    frozen = {name: frozenset(v) for name, v in sets.items()}
    return P5Context(tuple(p5), frozen, groups, a_prime)


def _homogeneity_defect(g: WeightedGraph, group: frozenset[int]) -> int | None:
    for x in range(g.n):
        if x in group:
            continue
        hits = sum(1 for v in group if g.has_edge(x, v))
        if 0 < hits < len(group):
            return x
    return None


def forkbull_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[WeightedColoring, PipelineTrace]:
    """Exact WVC for (fork, bull)-free graphs.

    Mutually recursive fixpoint: modular decomposition; clique-cutset
    decomposition on prime quotients (blocks re-enter the fixpoint: a
    block of a prime graph need not be prime, and the hole/P5 theorems
    need primality); on prime cutset-free blocks: a hole of length >= 6
    forces the block to be that hole or bipartite; otherwise an induced
    P5 yields the stable class {v1,v3,v5}, whose weights are decremented
    before recursing; otherwise the block is (P5, bull)-free.
    """
    _require_class(g, "forkbull")
    trace = PipelineTrace("forkbull")
    col = _fb_solve(g, trace, node_budget)
    trace.record("done", classes=col.class_count)
    return col, trace


def _fb_solve(g: WeightedGraph, trace: PipelineTrace, budget: int) -> WeightedColoring:
    trace.record("modular", n=g.n, total_weight=g.total_weight())
    return wvc_by_modules(g, lambda q: _fb_prime(q, trace, budget))


def _fb_prime(q: WeightedGraph, trace: PipelineTrace, budget: int) -> WeightedColoring:
    cut = find_clique_cutset(q)
    if cut is not None:
        qset, parts = cut
        trace.record("cutset", n=q.n, cutset=sorted(qset), parts=len(parts))
        return wvc_by_cblocks(q, lambda b: _fb_solve(b, trace, budget))
    return _fb_block(q, trace, budget)


def _fb_block(b: WeightedGraph, trace: PipelineTrace, budget: int) -> WeightedColoring:
    hole = find_hole_at_least(b, 6)
    if hole is not None:
        if b.n == hole.length:
            trace.record("hole", n=b.n, length=hole.length,
                         kind="odd-hyperhole" if hole.length % 2 else "even-cycle")
            return weighted_hole_wvc(b, hole)
        if b.bipartition() is not None:
            trace.record("hole", n=b.n, length=hole.length, kind="bipartite")
            return bipartite_wvc(b)
        raise StructureViolation(
            "fbh",
            "prime cutset-free (fork,bull)-free block with a hole of length "
            ">= 6 is neither that hole nor bipartite",
            payload={"graph": graph_to_dict(b), "hole": list(hole.vertices)},
        )
    p5 = find_p5(b)
    if p5 is not None:
        build_p5_context(b, p5)
        s = frozenset((p5[0], p5[2], p5[4]))
        trace.record("p5-step", n=b.n, stable=sorted(s),
                     total_weight=b.total_weight())
        neww = list(b.weights)
        for v in s:
            neww[v] -= 1
        keep = [v for v in range(b.n) if neww[v] > 0]
        sub, vmap = b.induced(keep)
        sub = WeightedGraph(sub.n, sub.adj, tuple(neww[v] for v in vmap))
        subcol = _fb_solve(sub, trace, budget)
        lifted = [frozenset(vmap[i] for i in cls) for cls in subcol.classes]
        return WeightedColoring((s, *lifted))
    # P5-free block: (P5, bull)-free prime solver applies
    return _p5bull_prime(b, trace, budget)


# ---------------------------------------------------------------------------
# Auto dispatch
# ---------------------------------------------------------------------------

_PIPELINES = {
    "p5dart": p5dart_wvc,
    "p5banner": p5banner_wvc,
    "p5bull": p5bull_wvc,
    "forkbull": forkbull_wvc,
}


def class_memberships(g: WeightedGraph) -> dict[str, tuple[str, tuple[int, ...]] | None]:
    """Per class: None when the graph belongs, else the first witness."""
    return {label: find_forbidden(g, CLASS_PATTERNS[label]) for label in CLASS_ORDER}


def auto_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[str, WeightedColoring, PipelineTrace]:
    """Dispatch to the first class (fixed order) whose patterns are absent."""
    witnesses: dict[str, tuple[str, tuple[int, ...]]] = {}
    for label in CLASS_ORDER:
        hit = find_forbidden(g, CLASS_PATTERNS[label])
        if hit is None:
            col, trace = _PIPELINES[label](g, node_budget)
            return label, col, trace
        witnesses[label] = hit
    raise NoSupportedClassError(witnesses)


def solve(
    g: WeightedGraph, label: str = "auto", node_budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[str, WeightedColoring, PipelineTrace]:
    if label == "auto":
        return auto_wvc(g, node_budget)
    col, trace = _PIPELINES[label](g, node_budget)
    return label, col, trace
