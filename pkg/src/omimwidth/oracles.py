"""Exhaustive ground truth for tests.  Slow on purpose; nothing here is clever.

Size caps are keyword arguments so experiments can lift them knowingly.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits, connected_components, is_forest, is_independent


def _require(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise ValueError(f"{what} accepts at most {limit} vertices, got {g.n}")


def brute_is(g: Graph, limit: int = 24) -> tuple[int, int]:
    """Max-weight independent set by include/exclude branching on a max-degree vertex."""
    _require(g, limit, "brute_is")
    adj = g.adj
    best = [-1, 0]

    def go(x: int, taken: int, weight: int) -> None:
        if weight + g.weight(x) <= best[0]:
            return
        v, deg = -1, -1
        for u in bits(x):
            d = (adj[u] & x).bit_count()
            if d > deg:
                v, deg = u, d
        if deg <= 0:
            # remaining vertices are pairwise non-adjacent
            best[0], best[1] = weight + g.weight(x), taken | x
            return
        go(x & ~g.closed(v), taken | 1 << v, weight + g.weights[v])
        go(x & ~(1 << v), taken, weight)

    go(g.all, 0, 0)
    return best[0], best[1]


def brute_fvs(g: Graph, limit: int = 20) -> tuple[int, int]:
    """Min-weight feedback vertex set: complement of the heaviest induced forest.

    Vertices are decided in order; a vertex joins the forest only when its
    chosen neighbours lie in distinct trees.
    """
    _require(g, limit, "brute_fvs")
    n, adj, w = g.n, g.adj, g.weights
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] + w[v]
    best = [-1, 0]
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def go(v: int, chosen: int, weight: int) -> None:
        if weight + suffix[v] <= best[0]:
            return
        if v == n:
            best[0], best[1] = weight, chosen
            return
        roots = [find(u) for u in bits(adj[v] & chosen)]
        if len(set(roots)) == len(roots):
            saved = [(r, parent[r]) for r in roots]
            for r in roots:
                parent[r] = v
            go(v + 1, chosen | 1 << v, weight + w[v])
            for r, p in saved:
                parent[r] = p
        go(v + 1, chosen, weight)

    go(0, 0, 0)
    forest = best[1]
    return g.weight(g.all) - best[0], g.all & ~forest


def brute_nd(g: Graph, limit: int = 12) -> int:
    """Neighbor-depth straight from the recursive definition, memoized on vertex sets."""
    _require(g, limit, "brute_nd")

    @lru_cache(maxsize=None)
    def nd(x: int) -> int:
        if not x:
            return 0
        comps = connected_components(g, x)
        if len(comps) > 1:
            return max(nd(c) for c in comps)
        return min(max(nd(x & ~g.closed(v)) + 1, nd(x & ~(1 << v))) for v in bits(x))

    return nd(g.all)


def brute_beta(g: Graph, limit: int = 8) -> int:
    """Smallest independent set branching tree, over every pivot and every split."""
    _require(g, limit, "brute_beta")

    @lru_cache(maxsize=None)
    def beta(x: int) -> int:
        if not x:
            return 1
        best = min(beta(x & ~g.closed(v)) + beta(x & ~(1 << v)) for v in bits(x))
        comps = connected_components(g, x)
        m = len(comps)
        # bipartitions of the components, first component always on the left
        for pick in range(1 << (m - 1)):
            left = comps[0]
            for i in range(1, m):
                if pick >> (i - 1) & 1:
                    left |= comps[i]
            if left != x:
                best = min(best, beta(left) + beta(x & ~left))
        return 1 + best

    return beta(g.all)


def best_completion(g: Graph, coll, y: int, family: str) -> int | None:
    """Heaviest X in ``coll`` with X | y feasible, None when there is none."""
    feasible = is_independent if family == "IS" else is_forest
    best = None
    for x in coll:
        if feasible(g, x | y):
            wx = g.weight(x)
            if best is None or wx > best:
                best = wx
    return best


def brute_representative_check(g: Graph, a: int, coll, reduced, family: str,
                               limit: int = 16) -> bool:
    """Whether ``reduced`` is a subfamily of ``coll`` with the same best completion for every Y."""
    if family not in ("IS", "F"):
        raise ValueError("family must be 'IS' or 'F'")
    abar = g.all & ~a
    if abar.bit_count() > limit:
        raise ValueError(f"representativity check enumerates at most 2^{limit} outside sets")
    coll, reduced = set(coll), set(reduced)
    if not reduced <= coll:
        return False
    feasible = is_independent if family == "IS" else is_forest
    outside = list(bits(abar))
    for pick in range(1 << len(outside)):
        y = 0
        for i, v in enumerate(outside):
            if pick >> i & 1:
                y |= 1 << v
        if not feasible(g, y):
            # feasibility is hereditary, so nothing completes y
            continue
        if best_completion(g, coll, y, family) != best_completion(g, reduced, y, family):
            return False
    return True
