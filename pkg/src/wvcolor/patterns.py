"""Detection of the fixed forbidden subgraphs and of holes.

Every detector is a pure function over immutable graphs.  Witnesses are
deterministic: the backtracking search fills pattern positions left to
right with ascending graph vertices, so the first embedding found is
the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import WeightedGraph, bits, build, mask_of

# ---------------------------------------------------------------------------
# Pattern catalog
#
# Adjacency follows the usual drawings: dart = diamond plus a pendant at a
# degree-3 vertex, banner = C4 plus a pendant, bull = triangle with two
# horns, fork = claw with one subdivided edge, gem = P4 plus a dominating
# vertex.  house, hammer and co-dart are the complements of P5, banner and
# dart.  Vertex numbering inside each pattern is chosen so that early
# positions are already constrained by edges, which keeps the backtracking
# search tight.
# ---------------------------------------------------------------------------


def _pattern_graph(n: int, edges: list[tuple[int, int]]) -> WeightedGraph:
    return build(n, edges)


_BASE: dict[str, WeightedGraph] = {}

for _k in range(1, 7):
    _BASE[f"P{_k}"] = _pattern_graph(_k, [(i, i + 1) for i in range(_k - 1)])
for _k in range(3, 8):
    _BASE[f"C{_k}"] = _pattern_graph(_k, [(i, (i + 1) % _k) for i in range(_k)])
for _k in range(1, 6):
    _BASE[f"K{_k}"] = _pattern_graph(_k, [(i, j) for i in range(_k) for j in range(i + 1, _k)])
for _k in range(1, 5):
    _BASE[f"O{_k}"] = _pattern_graph(_k, [])

_BASE["dart"] = _pattern_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4)])
_BASE["banner"] = _pattern_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])
_BASE["bull"] = _pattern_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
_BASE["fork"] = _pattern_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
_BASE["gem"] = _pattern_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
_BASE["house"] = _BASE["P5"].complement()
_BASE["hammer"] = _BASE["banner"].complement()
_BASE["co-dart"] = _BASE["dart"].complement()


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: WeightedGraph


CATALOG: dict[str, Pattern] = {name: Pattern(name, g) for name, g in _BASE.items()}


def pattern(name: str) -> Pattern:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; known: {sorted(CATALOG)}") from None


# ---------------------------------------------------------------------------
# Induced-subgraph search
# ---------------------------------------------------------------------------


def find_induced(g: WeightedGraph, p: Pattern | str) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``p`` in ``g``, or None.

    An embedding is an injective vertex tuple preserving both adjacency
    and non-adjacency.
    """
    if isinstance(p, str):
        p = pattern(p)
    pg = p.graph
    k = pg.n
    if k > g.n:
        return None
    full = g.full_mask()
    adj = g.adj
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(g.n)]
    # prows[i][j] == True iff pattern vertices j,i are adjacent (j < i)
    prows = [[bool(pg.adj[i] >> j & 1) for j in range(i)] for i in range(k)]

    assign = [0] * k
    last = k - 1

    def place(i: int, used: int) -> bool:
        cand = full & ~used
        for j, edge in enumerate(prows[i]):
            cand &= adj[assign[j]] if edge else nonadj[assign[j]]
            if not cand:
                return False
        if i == last:
            assign[i] = (cand & -cand).bit_length() - 1
            return True
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            assign[i] = v
            if place(i + 1, used | low):
                return True
        return False

    if k == 0:
        return ()
    return tuple(assign) if place(0, 0) else None


def find_forbidden(
    g: WeightedGraph, names: tuple[str, ...] | list[str]
) -> tuple[str, tuple[int, ...]] | None:
    """First listed pattern present in ``g``, with its witness embedding."""
    for name in names:
        emb = find_induced(g, name)
        if emb is not None:
            return name, emb
    return None


def is_free(
    g: WeightedGraph, names: tuple[str, ...] | list[str]
) -> tuple[bool, tuple[str, tuple[int, ...]] | None]:
    """True iff every listed pattern is absent; else the first witness."""
    hit = find_forbidden(g, names)
    return (hit is None), hit


# ---------------------------------------------------------------------------
# Triangles and triads
# ---------------------------------------------------------------------------


def has_triangle(g: WeightedGraph) -> bool:
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if v > u and g.adj[u] & g.adj[v]:
                return True
    return False


def has_triad(g: WeightedGraph) -> bool:
    """Three mutually non-adjacent vertices."""
    full = g.full_mask()
    for u in range(g.n):
        non_u = full & ~g.adj[u] & ~(1 << u) & ~((1 << u) - 1)
        for v in bits(non_u):
            if (non_u & full & ~g.adj[v] & ~(1 << v)) >> (v + 1):
                return True
    return False


def find_triad(g: WeightedGraph) -> tuple[int, int, int] | None:
    full = g.full_mask()
    for u in range(g.n):
        non_u = full & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(non_u):
            both = non_u & ~g.adj[v] & ~((1 << (v + 1)) - 1)
            if both:
                w = next(bits(both))
                return (u, v, w)
    return None


# ---------------------------------------------------------------------------
# Holes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HoleWitness:
    """Cyclically ordered vertex list of an induced cycle, length >= 5."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def mask(self) -> int:
        return mask_of(self.vertices)


def is_hole(g: WeightedGraph, vertices: tuple[int, ...]) -> bool:
    ell = len(vertices)
    if ell < 5 or len(set(vertices)) != ell:
        return False
    m = mask_of(vertices)
    for i, v in enumerate(vertices):
        want = (1 << vertices[(i - 1) % ell]) | (1 << vertices[(i + 1) % ell])
        if g.adj[v] & m != want:
            return False
    return True


def _canonical_cycle(cyc: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex opens and its smaller neighbor follows."""
    i = cyc.index(min(cyc))
    ell = len(cyc)
    fwd = tuple(cyc[(i + j) % ell] for j in range(ell))
    bwd = tuple(cyc[(i - j) % ell] for j in range(ell))
    return fwd if fwd[1] <= bwd[1] else bwd


def find_c5(g: WeightedGraph) -> HoleWitness | None:
    emb = find_induced(g, "C5")
    return HoleWitness(emb) if emb is not None else None


def find_p5(g: WeightedGraph) -> tuple[int, ...] | None:
    return find_induced(g, "P5")


def _induced_p5s(g: WeightedGraph):
    """Yield all induced P5 embeddings in lexicographic order."""
    pg = _BASE["P5"]
    k = 5
    full = g.full_mask()
    nonadj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    prows = [[bool(pg.adj[i] >> j & 1) for j in range(i)] for i in range(k)]
    assign = [0] * k

    def place(i: int, used: int):
        cand = full & ~used
        row = prows[i]
        for j in range(i):
            cand &= g.adj[assign[j]] if row[j] else nonadj[assign[j]]
            if not cand:
                return
        for v in bits(cand):
            assign[i] = v
            if i + 1 == k:
                yield tuple(assign)
            else:
                yield from place(i + 1, used | (1 << v))

    yield from place(0, 0)


def find_hole_at_least(g: WeightedGraph, lmin: int = 6) -> HoleWitness | None:
    """Some hole of length >= 6 if one exists (not necessarily shortest).

    Method: for every induced P5 p1..p5, look for a shortest p5-p1 path in
    the graph minus (N[p2] u N[p3] u N[p4]) \\ {p1, p5}.  Shortest paths
    are induced, interior vertices avoid p2..p4, and p1 is non-adjacent to
    p5, so any such path closes an induced cycle of length >= 6.  Every
    hole of length >= 6 contains five consecutive vertices forming such a
    P5, so the search is complete.
    """
    if lmin != 6:
        raise ValueError("only lmin == 6 is supported")
    full = g.full_mask()
    for p1, p2, p3, p4, p5 in _induced_p5s(g):
        blocked = (
            g.adj[p2] | g.adj[p3] | g.adj[p4] | (1 << p2) | (1 << p3) | (1 << p4)
        )
        blocked &= ~((1 << p1) | (1 << p5))
        allowed = full & ~blocked
        path = _shortest_path_in(g, allowed, p5, p1)
        if path is not None and len(path) >= 3:
            cyc = (p1, p2, p3, p4) + tuple(path)  # path runs p5 .. p1
            return HoleWitness(_canonical_cycle(cyc[:-1]))
    return None


def _shortest_path_in(
    g: WeightedGraph, allowed: int, src: int, dst: int
) -> tuple[int, ...] | None:
    """Deterministic BFS path src..dst inside ``allowed``, inclusive."""
    if not (allowed >> src & 1) or not (allowed >> dst & 1):
        return None
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v] & allowed):
                if u not in parent:
                    parent[u] = v
                    if u == dst:
                        out = [u]
                        while parent[out[-1]] != -1:
                            out.append(parent[out[-1]])
                        return tuple(reversed(out))
                    nxt.append(u)
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# Hole neighborhood classification (bull-free lemma support)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HoleNeighborhood:
    kind: str           # "stable" | "full" | "triple" | "triple-plus" | "other"
    center: int | None  # witness position index for the triple kinds


def hole_neighborhood_class(
    g: WeightedGraph, hole: HoleWitness, x: int
) -> HoleNeighborhood:
    """Classify N_B(x) against the hole B, for x outside B."""
    ell = hole.length
    if ell < 6:
        raise ValueError("hole must have length >= 6")
    if x in hole.vertices:
        raise ValueError(f"vertex {x} lies on the hole")
    pos = {v: i for i, v in enumerate(hole.vertices)}
    hit = sorted(pos[v] for v in hole.vertices if g.has_edge(x, v))
    hset = set(hit)
    if len(hit) == ell:
        return HoleNeighborhood("full", None)
    if all((i + 1) % ell not in hset for i in hit):
        return HoleNeighborhood("stable", None)
    if len(hit) == 3:
        for i in hit:
            if {(i - 1) % ell, i, (i + 1) % ell} == hset:
                return HoleNeighborhood("triple", i)
    if len(hit) == 4 and ell == 6:
        for i in hit:
            if {(i - 1) % ell, i, (i + 1) % ell, (i + 3) % ell} == hset:
                return HoleNeighborhood("triple-plus", i)
    return HoleNeighborhood("other", None)


# ---------------------------------------------------------------------------
# Bounded diagnostic hole search (harness only)
# ---------------------------------------------------------------------------


class SearchBudgetExceeded(Exception):
    pass


def find_hole_bounded(
    g: WeightedGraph,
    lengths: frozenset[int] | set[int],
    budget: int = 2_000_000,
) -> tuple[int, ...] | None:
    """Exhaustive induced-cycle search restricted to the given lengths.

    Raises SearchBudgetExceeded when the node budget runs out, so callers
    can honestly report "unverified" instead of guessing.
    """
    if not lengths:
        return None
    max_len = max(lengths)
    steps = 0

    def extend(v0: int, pth: list[int], pmask: int):
        nonlocal steps
        last = pth[-1]
        interior = pmask & ~(1 << v0) & ~(1 << last)
        first_step = len(pth) == 1
        for u in bits(g.adj[last] & ~((1 << (v0 + 1)) - 1) & ~pmask):
            steps += 1
            if steps > budget:
                raise SearchBudgetExceeded()
            if g.adj[u] & interior:
                continue
            # On the first step the edge back to v0 is the path edge itself,
            # not a chord; closure semantics start from the second step.
            closes = not first_step and bool(g.adj[u] >> v0 & 1)
            length = len(pth) + 1
            if closes and length in lengths and length >= 4:
                return tuple(pth) + (u,)
            if not closes and length < max_len:
                got = extend(v0, pth + [u], pmask | (1 << u))
                if got is not None:
                    return got
        return None

    for v0 in range(g.n):
        got = extend(v0, [v0], 1 << v0)
        if got is not None:
            return got
    return None
