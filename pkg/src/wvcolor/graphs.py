"""Weighted simple graphs and weighted colorings.

Vertices are dense integer indices 0..n-1.  Adjacency is one bitmask per
vertex: at the target scale (tens of vertices, a few hundred at most)
this keeps the subgraph-heavy decomposition code and the pattern
detectors cheap.  Graphs are immutable after construction; subgraph
operations return index maps instead of preserving labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import GraphBuildError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected simple graph with positive integer vertex weights."""

    n: int
    adj: tuple[int, ...]        # adj[v] = neighbor bitmask, bit v always clear
    weights: tuple[int, ...]

    # -- primitive queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if v > u]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def nonadj(self, v: int) -> int:
        """Bitmask of non-neighbors of ``v`` (excluding ``v`` itself)."""
        return self.full_mask() & ~self.adj[v] & ~(1 << v)

    def total_weight(self) -> int:
        return sum(self.weights)

    def size_measure(self) -> int:
        """|V| + |E| + sum of weights, the instance size convention."""
        return self.n + self.edge_count() + self.total_weight()

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> WeightedGraph:
        full = self.full_mask()
        adj = tuple(full & ~self.adj[v] & ~(1 << v) for v in range(self.n))
        return WeightedGraph(self.n, adj, self.weights)

    def induced(self, vertices: Iterable[int]) -> tuple[WeightedGraph, tuple[int, ...]]:
        """Induced subgraph on ``vertices`` plus the new->old index map."""
        vmap = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(vmap)}
        adj = []
        for v in vmap:
            m = 0
            for u in bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    m |= 1 << j
            adj.append(m)
        weights = tuple(self.weights[v] for v in vmap)
        return WeightedGraph(len(vmap), tuple(adj), weights), vmap

    def induced_mask(self, mask: int) -> tuple[WeightedGraph, tuple[int, ...]]:
        return self.induced(bits(mask))

    def blow_up(
        self, multiplicities: Mapping[int, int] | Sequence[int]
    ) -> tuple[WeightedGraph, tuple[tuple[int, ...], ...]]:
        """Replace each vertex by a clique of its multiplicity.

        Copies of adjacent vertices are fully adjacent; the result has
        unit weights.  Returns the graph and, per original vertex, the
        tuple of its copy indices.
        """
        if isinstance(multiplicities, Mapping):
            mult = [multiplicities.get(v, 1) for v in range(self.n)]
        else:
            if len(multiplicities) != self.n:
                raise GraphBuildError(
                    f"multiplicity sequence has length {len(multiplicities)}, expected {self.n}"
                )
            mult = list(multiplicities)
        for v, m in enumerate(mult):
            if m < 1:
                raise GraphBuildError(f"vertex {v}: multiplicity {m} must be >= 1")
        copies: list[tuple[int, ...]] = []
        nxt = 0
        for v in range(self.n):
            copies.append(tuple(range(nxt, nxt + mult[v])))
            nxt += mult[v]
        total = nxt
        adj = [0] * total
        for v in range(self.n):
            group = mask_of(copies[v])
            nbr = 0
            for u in bits(self.adj[v]):
                nbr |= mask_of(copies[u])
            for c in copies[v]:
                adj[c] = (group & ~(1 << c)) | nbr
        g = WeightedGraph(total, tuple(adj), (1,) * total)
        return g, tuple(copies)

    # -- set predicates ----------------------------------------------------

    def is_stable(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        for v in bits(m):
            if self.adj[v] & m:
                return False
        return True

    def is_clique(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        for v in bits(m):
            if (m & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    # -- connectivity ------------------------------------------------------

    def components(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(m)) for m in self.component_masks(self.full_mask()))

    def component_masks(self, mask: int) -> list[int]:
        """Connected components of the subgraph induced by ``mask``."""
        out = []
        rest = mask
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v] & mask
                frontier = nxt & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks(self.full_mask())) == 1

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """A valid two-sided partition, or None when an odd cycle exists."""
        side = self._two_color()
        if side is None:
            return None
        a = frozenset(v for v in range(self.n) if side[v] == 0)
        b = frozenset(v for v in range(self.n) if side[v] == 1)
        return a, b

    def odd_cycle(self) -> tuple[int, ...] | None:
        """Some odd cycle (as a closed walk of distinct vertices), if any."""
        side = [-1] * self.n
        parent = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in bits(self.adj[v]):
                    if side[u] == -1:
                        side[u] = side[v] ^ 1
                        parent[u] = v
                        queue.append(u)
                    elif side[u] == side[v]:
                        return _close_odd_cycle(parent, v, u)
        return None

    def _two_color(self) -> list[int] | None:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in bits(self.adj[v]):
                    if side[u] == -1:
                        side[u] = side[v] ^ 1
                        queue.append(u)
                    elif side[u] == side[v]:
                        return None
        return side

    # -- canonical forms ---------------------------------------------------

    def key(self) -> tuple:
        """Hashable identity (used by tests and determinism checks)."""
        return (self.n, self.adj, self.weights)


def _close_odd_cycle(parent: list[int], v: int, u: int) -> tuple[int, ...]:
    # Walk both BFS ancestries to the meeting point; path(v)+path(u) closes
    # an odd cycle because v and u sit on the same side.
    anc_v = [v]
    while parent[anc_v[-1]] != -1:
        anc_v.append(parent[anc_v[-1]])
    index = {x: i for i, x in enumerate(anc_v)}
    walk_u = [u]
    while walk_u[-1] not in index:
        walk_u.append(parent[walk_u[-1]])
    meet = walk_u[-1]
    cycle = anc_v[: index[meet] + 1] + walk_u[-2::-1]
    return tuple(cycle)


def build(
    n: int,
    edges: Iterable[tuple[int, int]] = (),
    weights: Mapping[int, int] | Sequence[int] | None = None,
) -> WeightedGraph:
    """Construct a normalized graph; duplicate edges collapse.

    Rejects out-of-range endpoints, self-loops and nonpositive weights
    with a diagnostic naming the offending entry.
    """
    if n < 0:
        raise GraphBuildError(f"vertex count {n} must be >= 0")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphBuildError(f"edge ({u}, {v}): endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphBuildError(f"edge ({u}, {v}): self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if weights is None:
        w = [1] * n
    elif isinstance(weights, Mapping):
        w = [1] * n
        for v, wt in weights.items():
            if not (0 <= v < n):
                raise GraphBuildError(f"weight for vertex {v}: out of range 0..{n - 1}")
            w[v] = wt
    else:
        if len(weights) != n:
            raise GraphBuildError(
                f"weight sequence has length {len(weights)}, expected {n}"
            )
        w = list(weights)
    for v, wt in enumerate(w):
        if not isinstance(wt, int) or wt < 1:
            raise GraphBuildError(f"vertex {v}: nonpositive weight {wt}")
    return WeightedGraph(n, tuple(adj), tuple(w))


def cycle(n: int, weights=None) -> WeightedGraph:
    return build(n, [(i, (i + 1) % n) for i in range(n)], weights)


def path(n: int, weights=None) -> WeightedGraph:
    return build(n, [(i, i + 1) for i in range(n - 1)], weights)


def complete(n: int, weights=None) -> WeightedGraph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)], weights)


def empty(n: int, weights=None) -> WeightedGraph:
    return build(n, [], weights)


# -- weighted colorings ----------------------------------------------------


@dataclass(frozen=True)
class WeightedColoring:
    """A multiset of stable sets; vertex v must appear in >= w(v) of them."""

    classes: tuple[frozenset[int], ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def coverage(self, v: int) -> int:
        return sum(1 for c in self.classes if v in c)

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]


def coloring(classes: Iterable[Iterable[int]]) -> WeightedColoring:
    return WeightedColoring(tuple(frozenset(c) for c in classes))


@dataclass(frozen=True)
class ColoringVerdict:
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_coloring(g: WeightedGraph, col: WeightedColoring) -> ColoringVerdict:
    """Accept iff every class is stable and every vertex is covered w(v) times."""
    for i, cls in enumerate(col.classes):
        for v in cls:
            if not (0 <= v < g.n):
                return ColoringVerdict(False, f"class {i}: vertex {v} out of range")
        m = mask_of(cls)
        for v in cls:
            if g.adj[v] & m:
                u = next(bits(g.adj[v] & m))
                return ColoringVerdict(
                    False, f"class {i} is not stable: contains edge ({v}, {u})"
                )
    for v in range(g.n):
        got = col.coverage(v)
        if got < g.weights[v]:
            return ColoringVerdict(
                False, f"vertex {v}: coverage {got} < weight {g.weights[v]}"
            )
    return ColoringVerdict(True)


# -- exact maximum weight clique --------------------------------------------


def max_weight_clique(g: WeightedGraph) -> tuple[frozenset[int], int]:
    """Exact maximum-weight clique via branch and bound.

    The upper bound partitions the candidate set greedily into stable
    sets and sums the heaviest vertex of each.  Exponential worst case;
    meant for desk-scale inputs.
    """
    if g.n == 0:
        return frozenset(), 0
    w = g.weights
    adj = g.adj

    def upper(cand: int) -> int:
        total = 0
        rest = cand
        while rest:
            avail = rest
            mx = 0
            while avail:
                v = (avail & -avail).bit_length() - 1
                if w[v] > mx:
                    mx = w[v]
                rest ^= 1 << v
                avail &= ~adj[v]
                avail &= ~(1 << v)
            total += mx
        return total

    best_mask = 0
    best_w = 0

    def expand(cur: int, cur_w: int, cand: int) -> None:
        nonlocal best_mask, best_w
        if cur_w > best_w:
            best_w = cur_w
            best_mask = cur
        while cand:
            if cur_w + upper(cand) <= best_w:
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            expand(cur | (1 << v), cur_w + w[v], cand & adj[v])

    expand(0, 0, g.full_mask())
    return frozenset(bits(best_mask)), best_w
