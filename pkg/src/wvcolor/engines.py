"""Terminal coloring solvers the pipelines dispatch to.

oracle_wvc / perfect_wvc share one exact branch-and-bound engine (they
differ only in seeding and intent); triadfree_wvc reduces to maximum
matching in the complement; bipartite_wvc is a closed form; the
hyperhole solver follows the constructive induction for odd cycles of
cliques.  Every engine returns a certificate that validate_coloring
accepts, or raises loudly - never a silent approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OracleBudgetExceeded, PreconditionError
from .graphs import (
    WeightedColoring,
    WeightedGraph,
    bits,
    mask_of,
    max_weight_clique,
)
from .patterns import HoleWitness, find_triad, is_hole

DEFAULT_ORACLE_BUDGET = 10_000_000


# ---------------------------------------------------------------------------
# Exact weighted coloring by branch and bound
# ---------------------------------------------------------------------------


class _ExactSolver:
    """Branch and bound over maximal stable sets, memoized on weight vectors.

    Branching rule: pick the least-index vertex with positive residual
    weight and try every maximal stable set containing it (some optimal
    solution uses one, by the usual exchange argument).  The memo keeps
    exact values and, for alpha-pruned entries, lower bounds.
    """

    def __init__(self, g: WeightedGraph, budget: int):
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.full = g.full_mask()
        self.nonadj = [self.full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
        self.memo: dict[bytes, tuple[int, bool]] = {}
        self.choice: dict[bytes, int] = {}
        self.clique_cache: dict[bytes, int] = {}

    # -- bounds ------------------------------------------------------------

    def greedy_upper(self) -> int:
        """Sequential interval multicoloring: a valid upper bound."""
        g = self.g
        order = sorted(range(g.n), key=lambda v: (-g.weights[v], v))
        used: list[set[int]] = [set() for _ in range(g.n)]
        high = 0
        for v in order:
            taken: set[int] = set()
            for u in bits(g.adj[v]):
                taken |= used[u]
            got = 0
            c = 0
            while got < g.weights[v]:
                if c not in taken:
                    used[v].add(c)
                    got += 1
                    high = max(high, c + 1)
                c += 1
        return high

    def clique_bound(self, wkey: bytes, weights: list[int]) -> int:
        got = self.clique_cache.get(wkey)
        if got is None:
            live = [v for v in range(self.g.n) if weights[v] > 0]
            sub, vmap = self.g.induced(live)
            subw = tuple(weights[v] for v in vmap)
            _, got = max_weight_clique(
                WeightedGraph(sub.n, sub.adj, subw)
            )
            self.clique_cache[wkey] = got
        return got

    # -- maximal stable sets containing a vertex ----------------------------

    def _mis_with(self, v: int, pos_mask: int):
        """Masks of maximal stable sets of G[pos_mask] that contain v.

        These are exactly {v} + maximal stable sets of the non-neighbors
        of v inside pos_mask.  Enumerated by pivoted Bron-Kerbosch on the
        complement, deterministically.
        """
        ground = pos_mask & self.nonadj[v]
        vbit = 1 << v
        nonadj = self.nonadj
        out: list[int] = []

        def bk(r: int, p: int, x: int) -> None:
            if not p and not x:
                out.append(r | vbit)
                return
            px = p | x
            pivot = -1
            best = -1
            for u in bits(px):
                score = (p & nonadj[u]).bit_count()
                if score > best:
                    best = score
                    pivot = u
            ext = p & ~nonadj[pivot]
            for u in bits(ext):
                ub = 1 << u
                bk(r | ub, p & nonadj[u], x & nonadj[u])
                p &= ~ub
                x |= ub

        bk(0, ground, 0)
        return out

    # -- search --------------------------------------------------------------

    def chi(self, weights: list[int], ub: int) -> int:
        """Exact chi_w if it is < ub, else any value >= ub."""
        self.nodes += 1
        if self.nodes > self.budget:
            raise OracleBudgetExceeded(self.nodes, self.budget)
        pos = 0
        for v in range(self.g.n):
            if weights[v] > 0:
                pos |= 1 << v
        if not pos:
            return 0
        wkey = bytes(weights)
        lb = self.clique_bound(wkey, weights)
        if lb >= ub:
            return ub
        cached = self.memo.get(wkey)
        if cached is not None:
            val, exact = cached
            if exact:
                return val
            if val >= ub:
                return ub
        v = next(bits(pos))
        best = ub
        for smask in self._mis_with(v, pos):
            sub = weights[:]
            for u in bits(smask):
                if sub[u] > 0:
                    sub[u] -= 1
            r = self.chi(sub, best - 1) + 1
            if r < best:
                best = r
                self.choice[wkey] = smask
            if best <= lb:
                break
        if best < ub:
            self.memo[wkey] = (best, True)
        else:
            prev = cached[0] if cached is not None else 0
            self.memo[wkey] = (max(prev, ub), False)
        return best

    def solve(self) -> WeightedColoring:
        weights = list(self.g.weights)
        if not any(weights):
            return WeightedColoring(())
        ub = self.greedy_upper()
        value = self.chi(weights, ub + 1)
        classes: list[frozenset[int]] = []
        cur = weights
        for _ in range(value):
            smask = self.choice[bytes(cur)]
            classes.append(frozenset(bits(smask)))
            cur = cur[:]
            for u in bits(smask):
                if cur[u] > 0:
                    cur[u] -= 1
        assert not any(cur), "reconstruction did not exhaust the weights"
        return WeightedColoring(tuple(classes))


def oracle_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> WeightedColoring:
    """Exact weighted chromatic number with certificate.

    Desk-scale independent oracle.  Exceeding the node budget raises
    OracleBudgetExceeded rather than degrading the answer.
    """
    return _ExactSolver(g, node_budget).solve()


def perfect_wvc(
    g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> WeightedColoring:
    """Exact solver intended for blocks whose blow-up is perfect.

    Same search as oracle_wvc; on perfect inputs the weighted-clique root
    bound is tight so the search closes immediately.  Correctness never
    depends on perfection, only speed does.
    """
    return _ExactSolver(g, node_budget).solve()


def oracle_work(g: WeightedGraph, node_budget: int = DEFAULT_ORACLE_BUDGET):
    """Like oracle_wvc but also reports search effort (for reports)."""
    solver = _ExactSolver(g, node_budget)
    col = solver.solve()
    return col, solver.nodes


# ---------------------------------------------------------------------------
# Maximum matching (blossom) and the triad-free reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


def blossom_max_matching(g: WeightedGraph) -> Matching:
    """Maximum-cardinality matching in a general graph, O(V^3).

    Deterministic: augmenting searches start from exposed vertices in
    ascending order and scan neighbors in ascending order.
    """
    n = g.n
    adj = [list(bits(g.adj[v])) for v in range(n)]
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        used = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # two even vertices meet: contract the blossom
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            end = find_path(v)
            if end == -1:
                continue
            while end != -1:
                prev = parent[end]
                nxt = match[prev]
                match[end] = prev
                match[prev] = end
                end = nxt

    edges = tuple((u, match[u]) for u in range(n) if match[u] > u)
    return Matching(edges)


def triadfree_wvc(g: WeightedGraph) -> WeightedColoring:
    """Exact WVC for graphs with no triad (stable sets have size <= 2).

    chi_w = sum(w) - nu where nu is a maximum b-matching of the complement
    with vertex capacities w.  Realized by splitting each vertex into w(v)
    unit copies (copies of one vertex mutually non-adjacent so they can
    never be matched together) and running maximum matching.
    """
    triad = find_triad(g)
    if triad is not None:
        raise PreconditionError(
            f"graph has a triad {triad}; triad-free engine does not apply",
            witness=triad,
        )
    owner: list[int] = []
    for v in range(g.n):
        owner.extend([v] * g.weights[v])
    total = len(owner)
    adj = [0] * total
    for i in range(total):
        for j in range(i + 1, total):
            u, v = owner[i], owner[j]
            if u != v and not g.has_edge(u, v):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    split = WeightedGraph(total, tuple(adj), (1,) * total)
    matching = blossom_max_matching(split)
    matched = set()
    classes: list[frozenset[int]] = []
    for i, j in matching.edges:
        matched.add(i)
        matched.add(j)
        classes.append(frozenset((owner[i], owner[j])))
    for i in range(total):
        if i not in matched:
            classes.append(frozenset((owner[i],)))
    return WeightedColoring(tuple(classes))


# ---------------------------------------------------------------------------
# Bipartite closed form
# ---------------------------------------------------------------------------


def bipartite_wvc(g: WeightedGraph) -> WeightedColoring:
    """Exact WVC for bipartite graphs.

    chi_w = max(max edge weight sum, max vertex weight); side-A vertices
    take the low color interval, side-B vertices the high one.
    """
    sides = g.bipartition()
    if sides is None:
        raise PreconditionError(
            "graph is not bipartite", witness=g.odd_cycle()
        )
    if g.n == 0:
        return WeightedColoring(())
    a, b = sides
    w = g.weights
    k = max(w)
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if v > u:
                k = max(k, w[u] + w[v])
    classes = []
    for c in range(k):
        cls = {u for u in a if c < w[u]} | {v for v in b if c >= k - w[v]}
        classes.append(frozenset(cls))
    return WeightedColoring(tuple(classes))


# ---------------------------------------------------------------------------
# Hyperholes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hyperhole:
    """Odd cycle of cliques: position i complete to positions i-1, i+1."""

    sizes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def omega(self) -> int:
        ell = self.length
        return max(self.sizes[i] + self.sizes[(i + 1) % ell] for i in range(ell))

    def chi_formula(self) -> int:
        """max{omega, ceil(2N / (l-1))} for odd length l >= 5."""
        return max(self.omega(), -(-2 * self.total // (self.length - 1)))

    def offsets(self) -> tuple[int, ...]:
        out = []
        acc = 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    def realize(self) -> tuple[WeightedGraph, tuple[int, ...]]:
        """Unit-weight blow-up graph plus each vertex's position index."""
        ell = self.length
        offs = self.offsets()
        positions = []
        for i, s in enumerate(self.sizes):
            positions.extend([i] * s)
        total = self.total
        adj = [0] * total
        group = [mask_of(range(offs[i], offs[i] + self.sizes[i])) for i in range(ell)]
        for i in range(ell):
            nbr = group[(i - 1) % ell] | group[(i + 1) % ell]
            for c in range(offs[i], offs[i] + self.sizes[i]):
                adj[c] = (group[i] & ~(1 << c)) | nbr
        return WeightedGraph(total, tuple(adj), (1,) * total), tuple(positions)


def hyperhole_wvc(h: Hyperhole) -> WeightedColoring:
    """Color an odd hyperhole with exactly max{omega, ceil(2N/(l-1))} classes.

    Induction: while no position is empty, rotate so a deficient adjacent
    pair (least index minimizing the pair sum) sits outside the transversal,
    extract one vertex from every second position (a stable set meeting all
    maximum cliques), and repeat.  Once a position empties the remainder is
    a disjoint union of paths of cliques - an interval graph - finished by
    a cyclic-interval greedy that attains its clique number.
    """
    ell = h.length
    if ell < 5 or ell % 2 == 0:
        raise PreconditionError(
            f"hyperhole length {ell} not an odd number >= 5; even holes "
            "route to the bipartite engine"
        )
    if any(s < 1 for s in h.sizes):
        raise PreconditionError("all hyperhole positions must be non-empty")

    target = h.chi_formula()
    offs = h.offsets()
    remaining: list[list[int]] = [
        list(range(offs[i], offs[i] + h.sizes[i])) for i in range(ell)
    ]
    classes: list[frozenset[int]] = []

    while all(remaining[i] for i in range(ell)):
        sizes = [len(r) for r in remaining]
        pair = [sizes[i] + sizes[(i + 1) % ell] for i in range(ell)]
        i0 = min(range(ell), key=lambda i: (pair[i], i))
        transversal = [(i0 + 2 + 2 * t) % ell for t in range((ell - 1) // 2)]
        cls = [remaining[p].pop() for p in transversal]
        classes.append(frozenset(cls))

    # Path-of-cliques finisher on the non-empty segments.
    segments: list[list[int]] = []
    nonempty = [i for i in range(ell) if remaining[i]]
    if nonempty:
        empties = [i for i in range(ell) if not remaining[i]]
        start = (empties[0] + 1) % ell
        seg: list[int] = []
        for t in range(ell):
            i = (start + t) % ell
            if remaining[i]:
                seg.append(i)
            elif seg:
                segments.append(seg)
                seg = []
        if seg:
            segments.append(seg)
        rem_omega = 0
        for seg in segments:
            for t, i in enumerate(seg):
                rem_omega = max(rem_omega, len(remaining[i]))
                if t + 1 < len(seg):
                    rem_omega = max(
                        rem_omega, len(remaining[i]) + len(remaining[seg[t + 1]])
                    )
        palette: list[set[int]] = [set() for _ in range(rem_omega)]
        for seg in segments:
            cursor = 0
            for i in seg:
                for vid in remaining[i]:
                    palette[cursor].add(vid)
                    cursor = (cursor + 1) % rem_omega
        classes.extend(frozenset(c) for c in palette if c)

    assert len(classes) == target, (
        f"hyperhole construction used {len(classes)} classes, formula says {target}"
    )
    return WeightedColoring(tuple(classes))


def weighted_hole_wvc(g: WeightedGraph, hole: HoleWitness) -> WeightedColoring:
    """WVC of a weighted graph that is exactly an induced cycle.

    Odd length maps to the hyperhole solver with sizes = weights; even
    length is bipartite.
    """
    if g.n != hole.length or set(hole.vertices) != set(range(g.n)):
        raise PreconditionError("hole witness must cover the whole graph")
    if not is_hole(g, hole.vertices) or g.edge_count() != g.n:
        raise PreconditionError("graph is not exactly an induced cycle")
    if hole.length % 2 == 0:
        return bipartite_wvc(g)
    sizes = tuple(g.weights[v] for v in hole.vertices)
    h = Hyperhole(sizes)
    col = hyperhole_wvc(h)
    _, positions = h.realize()
    classes = []
    for cls in col.classes:
        classes.append(frozenset(hole.vertices[positions[c]] for c in cls))
    return WeightedColoring(tuple(classes))
