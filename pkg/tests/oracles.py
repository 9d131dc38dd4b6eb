"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive (subset/permutation enumeration,
exhaustive backtracking) and shares no code with the package's search
machinery, so agreement is meaningful evidence.
"""

from __future__ import annotations

import itertools

from wvcolor.graphs import WeightedGraph


def adjacency_matrix(g: WeightedGraph) -> list[list[bool]]:
    return [[g.has_edge(i, j) for j in range(g.n)] for i in range(g.n)]


def brute_find_induced(g: WeightedGraph, pat: WeightedGraph) -> tuple[int, ...] | None:
    """First (lexicographic) induced embedding by raw tuple enumeration."""
    k = pat.n
    if k > g.n:
        return None
    gm = adjacency_matrix(g)
    pm = adjacency_matrix(pat)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for tup in itertools.permutations(range(g.n), k):
        ok = True
        for i, j in pairs:
            if gm[tup[i]][tup[j]] != pm[i][j]:
                ok = False
                break
        if ok:
            return tup
    return None


def brute_has_hole_at_least(g: WeightedGraph, lmin: int) -> bool:
    """Exhaustive induced-cycle enumeration (DFS over induced paths)."""
    n = g.n
    gm = adjacency_matrix(g)

    def extend(v0: int, pth: list[int]) -> bool:
        last = pth[-1]
        interior = pth[1:-1]
        first_step = len(pth) == 1
        for u in range(v0 + 1, n):
            if u in pth or not gm[last][u]:
                continue
            if any(gm[u][w] for w in interior):
                continue
            # On the first step the edge back to v0 is the path edge itself.
            if not first_step and gm[u][v0]:
                if len(pth) + 1 >= lmin:
                    return True
                continue
            if extend(v0, pth + [u]):
                return True
        return False

    return any(extend(v0, [v0]) for v0 in range(n))


def brute_holes_by_permutation(g: WeightedGraph, lengths) -> bool:
    """Even more naive cross-check: cyclic tuples over vertex subsets."""
    gm = adjacency_matrix(g)
    for ell in lengths:
        for sub in itertools.combinations(range(g.n), ell):
            anchor = sub[0]
            for perm in itertools.permutations(sub[1:]):
                cyc = (anchor,) + perm
                if not all(gm[cyc[i]][cyc[(i + 1) % ell]] for i in range(ell)):
                    continue
                induced = True
                for i in range(ell):
                    for j in range(i + 2, ell):
                        if i == 0 and j == ell - 1:
                            continue
                        if gm[cyc[i]][cyc[j]]:
                            induced = False
                            break
                    if not induced:
                        break
                if induced:
                    return True
    return False


def brute_max_matching(g: WeightedGraph) -> int:
    """Maximum matching size by branching on the least uncovered vertex."""
    edges = g.edges()
    memo: dict[int, int] = {}

    def rec(avail: int) -> int:
        if avail in memo:
            return memo[avail]
        v = -1
        for i in range(g.n):
            if avail >> i & 1:
                v = i
                break
        if v == -1:
            return 0
        best = rec(avail & ~(1 << v))      # leave v uncovered
        for u, w in edges:
            if u == v or w == v:
                other = w if u == v else u
                if avail >> other & 1:
                    best = max(best, 1 + rec(avail & ~(1 << u) & ~(1 << w)))
        memo[avail] = best
        return best

    return rec(g.full_mask())


def brute_max_weight_clique(g: WeightedGraph) -> int:
    best = 0
    for size in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                best = max(best, sum(g.weights[v] for v in sub))
    return best


def brute_chi(g: WeightedGraph) -> int:
    """Exact chromatic number by k-coloring backtracking (unit weights)."""
    n = g.n
    if n == 0:
        return 0
    gm = adjacency_matrix(g)
    order = sorted(range(n), key=lambda v: -sum(gm[v]))

    def colorable(k: int) -> bool:
        assign = [-1] * n

        def rec(idx: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            used = {assign[u] for u in range(n) if assign[u] != -1 and gm[v][u]}
            cap = min(k, idx + 1)       # symmetry break: at most one new color
            for c in range(cap):
                if c not in used:
                    assign[v] = c
                    if rec(idx + 1):
                        return True
                    assign[v] = -1
            return False

        return rec(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def brute_chi_w(g: WeightedGraph) -> int:
    """Exact weighted chromatic number as chi of the unit-weight blow-up."""
    blown, _ = g.blow_up(list(g.weights))
    return brute_chi(blown)


def brute_is_module(g: WeightedGraph, s) -> bool:
    sset = set(s)
    for x in range(g.n):
        if x in sset:
            continue
        hits = [g.has_edge(x, v) for v in sset]
        if any(hits) and not all(hits):
            return False
    return True


def brute_has_proper_homogeneous_set(g: WeightedGraph) -> bool:
    for size in range(2, g.n):
        for s in itertools.combinations(range(g.n), size):
            if brute_is_module(g, s):
                return True
    return False
