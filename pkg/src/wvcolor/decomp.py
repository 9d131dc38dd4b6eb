"""Modular and clique-cutset decomposition with coloring recombination.

The modular decomposition is the naive polynomial one: minimal-module
closures of vertex pairs, grown to maximal proper strong modules.  It is
cubic-ish, trivially auditable, and plenty at desk scale.  Clique-cutset
search enumerates cliques in lexicographic order (every clique lives
inside the closed neighborhood of its least vertex) up to a size cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import WeightedColoring, WeightedGraph, bits

# ---------------------------------------------------------------------------
# Modular decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleNode:
    """Node of the strong-module tree over original vertex indices."""

    kind: str                       # "leaf" | "series" | "parallel" | "prime"
    vertices: frozenset[int]
    children: tuple["ModuleNode", ...] = ()
    quotient: WeightedGraph | None = None   # unit-weight graph on the children

    @property
    def vertex(self) -> int:
        if self.kind != "leaf":
            raise ValueError("vertex is only defined on leaves")
        return next(iter(self.vertices))

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for c in self.children)

    def all_nodes(self):
        yield self
        for c in self.children:
            yield from c.all_nodes()


def _closure(g: WeightedGraph, mask: int, seed: int) -> int:
    """Minimal module of G[mask] containing the seed set (as masks)."""
    s = seed
    changed = True
    while changed:
        changed = False
        outside = mask & ~s
        for x in bits(outside):
            hit = g.adj[x] & s
            if hit and hit != s:
                s |= 1 << x
                changed = True
    return s


def _max_proper_module(g: WeightedGraph, mask: int, v: int) -> int:
    """Largest proper module of connected, co-connected G[mask] containing v.

    Grows by pair closures; in the prime case the union of all proper
    modules containing v is itself a proper module, so greedy growth is
    order-independent.
    """
    s = 1 << v
    changed = True
    while changed:
        changed = False
        for u in bits(mask & ~s):
            t = _closure(g, mask, s | (1 << u))
            if t != mask:
                if t != s:
                    s = t
                    changed = True
    return s


def modular_decompose(g: WeightedGraph) -> ModuleNode:
    """Strong-module tree: series iff quotient complete, parallel iff edgeless."""
    if g.n == 0:
        return ModuleNode("parallel", frozenset(), (), WeightedGraph(0, (), ()))
    return _decompose(g, g.full_mask())


def _decompose(g: WeightedGraph, mask: int) -> ModuleNode:
    if mask.bit_count() == 1:
        return ModuleNode("leaf", frozenset(bits(mask)))
    comps = g.component_masks(mask)
    if len(comps) > 1:
        return _internal(g, "parallel", comps)
    co = g.complement().component_masks(mask)
    if len(co) > 1:
        return _internal(g, "series", co)
    parts: list[int] = []
    assigned = 0
    for v in bits(mask):
        if assigned >> v & 1:
            continue
        part = _max_proper_module(g, mask, v)
        parts.append(part)
        assigned |= part
    return _internal(g, "prime", parts)


def _internal(g: WeightedGraph, kind: str, part_masks: list[int]) -> ModuleNode:
    # parts are disjoint, so least-bit order is lexicographic vertex order
    part_masks = sorted(part_masks, key=lambda m: m & -m)
    children = tuple(_decompose(g, m) for m in part_masks)
    reps = [next(bits(m)) for m in part_masks]
    k = len(reps)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(reps[i], reps[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    quotient = WeightedGraph(k, tuple(adj), (1,) * k)
    vertices = frozenset(bits(sum(part_masks)))
    return ModuleNode(kind, vertices, children, quotient)


def is_prime(g: WeightedGraph) -> bool:
    """Only trivial modules: a prime root whose children are all leaves."""
    if g.n <= 1:
        return True
    root = modular_decompose(g)
    return root.kind == "prime" and all(c.kind == "leaf" for c in root.children)


# ---------------------------------------------------------------------------
# Coloring through the module tree
# ---------------------------------------------------------------------------


def wvc_by_modules(g: WeightedGraph, prime_solver) -> WeightedColoring:
    """Optimal coloring assuming ``prime_solver`` is exact on prime quotients.

    series: palettes concatenated (children pairwise complete);
    parallel: classes merged index-wise (children anticomplete);
    prime: quotient weighted by child class counts is solved and each
    quotient class is expanded through an index-order bijection.
    """
    tree = modular_decompose(g)
    classes = _solve_node(g, tree, prime_solver)
    return WeightedColoring(tuple(classes))


def _solve_node(g: WeightedGraph, node: ModuleNode, prime_solver) -> list[frozenset[int]]:
    if node.kind == "leaf":
        v = node.vertex
        return [frozenset((v,))] * g.weights[v]
    child_classes = [_solve_node(g, c, prime_solver) for c in node.children]
    if not child_classes:           # empty graph
        return []
    if node.kind == "series":
        out: list[frozenset[int]] = []
        for cc in child_classes:
            out.extend(cc)
        return out
    if node.kind == "parallel":
        k = max(len(cc) for cc in child_classes)
        merged = [frozenset()] * k
        for cc in child_classes:
            for i, cls in enumerate(cc):
                merged[i] = merged[i] | cls
        return merged
    # prime: solve the quotient with child class counts as weights
    counts = [len(cc) for cc in child_classes]
    q = node.quotient
    weighted_q = WeightedGraph(q.n, q.adj, tuple(counts))
    qcol = prime_solver(weighted_q)
    result: list[set[int]] = [set() for _ in qcol.classes]
    for i, cc in enumerate(child_classes):
        slots = [s for s, cls in enumerate(qcol.classes) if i in cls]
        if len(slots) < counts[i]:
            raise PreconditionError(
                f"prime solver covered child {i} only {len(slots)} < {counts[i]} times"
            )
        for j in range(counts[i]):
            result[slots[j]] |= cc[j]
    return [frozenset(s) for s in result if s]


# ---------------------------------------------------------------------------
# Clique cutsets
# ---------------------------------------------------------------------------


def find_clique_cutset(
    g: WeightedGraph, max_clique_size: int = 12
) -> tuple[frozenset[int], tuple[frozenset[int], ...]] | None:
    """Lexicographically least clique whose removal disconnects ``g``.

    Complete for cutsets up to ``max_clique_size`` vertices (every clique
    is a subset of N[v] for its least vertex v, so lexicographic clique
    enumeration covers everything).
    """
    if g.n == 0:
        return None
    if not g.is_connected():
        raise PreconditionError("clique cutset search expects a connected graph")
    full = g.full_mask()

    def separated(qmask: int):
        rest = full & ~qmask
        if not rest:
            return None
        comps = g.component_masks(rest)
        return comps if len(comps) > 1 else None

    def extend(qmask: int, common: int, size: int):
        comps = separated(qmask)
        if comps is not None:
            return qmask, comps
        if size >= max_clique_size:
            return None
        for u in bits(common):
            got = extend(
                qmask | (1 << u),
                common & g.adj[u] & ~((1 << (u + 1)) - 1),
                size + 1,
            )
            if got is not None:
                return got
        return None

    for v in range(g.n):
        got = extend(1 << v, g.adj[v] & ~((1 << (v + 1)) - 1), 1)
        if got is not None:
            qmask, comps = got
            return frozenset(bits(qmask)), tuple(frozenset(bits(c)) for c in comps)
    return None


@dataclass(frozen=True)
class CBlockNode:
    """Leaf: a cutset-free block; internal: a separator with sub-blocks."""

    block: frozenset[int] | None
    separator: frozenset[int] | None
    children: tuple["CBlockNode", ...] = ()

    def leaves(self):
        if self.block is not None:
            yield self
        for c in self.children:
            yield from c.leaves()

    def separators(self):
        if self.separator is not None:
            yield self.separator
        for c in self.children:
            yield from c.separators()


@dataclass(frozen=True)
class CBlockTree:
    root: CBlockNode

    @property
    def blocks(self) -> tuple[frozenset[int], ...]:
        return tuple(leaf.block for leaf in self.root.leaves())

    @property
    def separators(self) -> tuple[frozenset[int], ...]:
        return tuple(self.root.separators())


def cblock_decompose(g: WeightedGraph, max_clique_size: int = 12) -> CBlockTree:
    """Recursive split along clique cutsets until no block has one."""
    if not g.is_connected():
        raise PreconditionError("cblock decomposition expects a connected graph")

    def node(vset: frozenset[int]) -> CBlockNode:
        sub, vmap = g.induced(vset)
        cut = find_clique_cutset(sub, max_clique_size)
        if cut is None:
            return CBlockNode(vset, None)
        q, comps = cut
        q_orig = frozenset(vmap[i] for i in q)
        children = tuple(
            node(frozenset(vmap[i] for i in comp) | q_orig) for comp in comps
        )
        return CBlockNode(None, q_orig, children)

    return CBlockTree(node(frozenset(range(g.n))))


def wvc_by_cblocks(
    g: WeightedGraph, block_solver, max_clique_size: int = 12
) -> WeightedColoring:
    """Optimal coloring by gluing block colorings across clique separators.

    Each class holds at most one vertex of a separator clique Q, so after
    trimming every Q-vertex to exactly w(v) classes per side, the classes
    covering each v pair off one-to-one and the palettes align.
    """
    tree = cblock_decompose(g, max_clique_size)

    def solve(nd: CBlockNode) -> list[frozenset[int]]:
        if nd.block is not None:
            sub, vmap = g.induced(nd.block)
            col = block_solver(sub)
            return [frozenset(vmap[i] for i in cls) for cls in col.classes]
        q = nd.separator
        acc = solve(nd.children[0])
        for child in nd.children[1:]:
            acc = _glue(g, acc, solve(child), q)
        return acc

    return WeightedColoring(tuple(solve(tree.root)))


def _trim_to_weight(
    classes: list[frozenset[int]], q: frozenset[int], weights
) -> list[frozenset[int]]:
    out = list(classes)
    for v in sorted(q):
        seen = 0
        for i, cls in enumerate(out):
            if v in cls:
                seen += 1
                if seen > weights[v]:
                    out[i] = cls - {v}
    return out


def _glue(
    g: WeightedGraph,
    a: list[frozenset[int]],
    b: list[frozenset[int]],
    q: frozenset[int],
) -> list[frozenset[int]]:
    a = _trim_to_weight(a, q, g.weights)
    b = _trim_to_weight(b, q, g.weights)
    partner: dict[int, int] = {}
    for v in sorted(q):
        a_idx = [i for i, cls in enumerate(a) if v in cls]
        b_idx = [i for i, cls in enumerate(b) if v in cls]
        assert len(a_idx) == len(b_idx) == g.weights[v], "separator coverage drift"
        for ai, bi in zip(a_idx, b_idx):
            partner[ai] = bi
    used_b = set(partner.values())
    free_b = [i for i in range(len(b)) if i not in used_b]
    out: list[frozenset[int]] = []
    for i, cls in enumerate(a):
        if i in partner:
            out.append(cls | b[partner[i]])
        elif free_b and not (cls & q):
            out.append(cls | b[free_b.pop(0)])
        else:
            out.append(cls)
    out.extend(b[i] for i in free_b)
    return out
