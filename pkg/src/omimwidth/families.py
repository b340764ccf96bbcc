"""Generators for the separating graph families, plus exhaustive structure checks.

Vertex numbering is fixed per family so cut hints and golden values stay put:

* ``swp6(n)``: V1 = 0..n-1, V2 = n..2n-1, the degree-2 vertex of (x, y)
  is ``2n + x*n + (y - n)`` (row-major).
* ``knn_pendant(n)``: K_{n,n} on 0..2n-1, the pendant of v is ``2n + v``.
* ``levels(L, q)``: vertex j of level l (0-based) is ``l*q*q + j``; j // q
  names its clique.
"""

from __future__ import annotations

import random

from .cuts import Cut
from .decomp import TreeDecomposition
from .graph import Graph, bits, to_mask


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def _join(g: Graph, h: Graph) -> Graph:
    u = _disjoint_union(g, h)
    edges = u.edges() + [(x, g.n + y) for x in range(g.n) for y in range(h.n)]
    return Graph.from_edges(u.n, edges)


def gen_cograph_tower(i: int) -> Graph:
    """G_1 = K1; G_i joins two copies of (G_{i-1} + G_{i-1}); 4^(i-1) vertices."""
    if i < 1:
        raise ValueError("tower index must be >= 1")
    g = Graph(1, [0])
    for _ in range(i - 1):
        doubled = _disjoint_union(g, g)
        g = _join(doubled, doubled)
    return g


def gen_swp6(n: int) -> tuple[Graph, Cut]:
    """K_{n,n} with a degree-2 vertex for every (V1, V2) pair; the hint cut is A = V1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = [(x, n + y) for x in range(n) for y in range(n)]
    for x in range(n):
        for y in range(n):
            mid = 2 * n + x * n + y
            edges += [(x, mid), (n + y, mid)]
    g = Graph.from_edges(2 * n + n * n, edges)
    return g, Cut(g, (1 << n) - 1)


def gen_knn_pendant(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = [(x, n + y) for x in range(n) for y in range(n)]
    edges += [(v, 2 * n + v) for v in range(2 * n)]
    return Graph.from_edges(4 * n, edges)


def gen_levels(levels: int, q: int) -> Graph:
    """Levels of q*q vertices: q disjoint q-cliques on even levels, their complement on odd.

    Levels are counted from 1, so the first level is a complement.
    Consecutive levels are joined by the identity matching.
    """
    if levels < 1 or q < 1:
        raise ValueError("levels and q must be >= 1")
    size = q * q
    edges = []
    for lvl in range(levels):
        base = lvl * size
        complement = lvl % 2 == 0
        for a in range(size):
            for b in range(a + 1, size):
                same = a // q == b // q
                if same != complement:
                    edges.append((base + a, base + b))
        if lvl + 1 < levels:
            edges += [(base + j, base + size + j) for j in range(size)]
    return Graph.from_edges(levels * size, edges)


def levels_decomposition(levels: int, q: int) -> TreeDecomposition:
    """Path of bags over consecutive complement levels, with a bag per clique hung off it."""
    if levels < 1 or q < 1:
        raise ValueError("levels and q must be >= 1")
    size = q * q

    def level(lvl: int) -> int:
        return to_mask(range(lvl * size, (lvl + 1) * size))

    odd = list(range(0, levels, 2))  # 0-based index of complement levels
    bags: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    path = []
    if len(odd) == 1:
        bags[0] = level(0)
        path.append((0, 0))
    for i in range(len(odd) - 1):
        t = len(bags)
        bags[t] = level(odd[i]) | level(odd[i + 1])
        if path:
            edges.append((path[-1][1], t))
        path.append((odd[i], t))
    for lvl in range(1, levels, 2):
        # the path bag containing level lvl - 1, which also holds lvl + 1 when it exists
        holder = next(t for start, t in path if start == lvl - 1) if lvl + 1 < levels else path[-1][1]
        around = level(lvl - 1) | (level(lvl + 1) if lvl + 1 < levels else 0)
        for c in range(q):
            clique = to_mask(lvl * size + c * q + j for j in range(q))
            t = len(bags)
            bags[t] = clique | around
            edges.append((holder, t))
    return TreeDecomposition(bags, edges)


def gen_chordal(n: int, seed: int) -> tuple[Graph, TreeDecomposition]:
    """Random chordal graph grown along a clique tree, with that clique tree.

    Each new vertex picks a random bag and a random subset S of it.  If S is
    the whole bag the bag grows; otherwise a new bag S + v hangs off it.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = random.Random(seed)
    bags: list[int] = [1]
    tree: list[tuple[int, int]] = []
    for v in range(1, n):
        b = rng.randrange(len(bags))
        s = 0
        for u in bits(bags[b]):
            if rng.random() < 0.7:
                s |= 1 << u
        if s == bags[b]:
            bags[b] |= 1 << v
        else:
            bags.append(s | 1 << v)
            tree.append((b, len(bags) - 1))
    edges = set()
    for bag in bags:
        vs = list(bits(bag))
        edges.update((a, c) for i, a in enumerate(vs) for c in vs[i + 1:])
    g = Graph.from_edges(n, sorted(edges))
    return g, TreeDecomposition(dict(enumerate(bags)), tree)


def gen_random(n: int, p: float, rng: random.Random, max_weight: int | None = None) -> Graph:
    """G(n, p) with optional uniform integer weights in [0, max_weight]."""
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    weights = None if max_weight is None else [rng.randint(0, max_weight) for _ in range(n)]
    return Graph.from_edges(n, edges, weights)


# ---------------------------------------------------------------- structure checks

STRUCTURE_LIMIT = 20


def has_induced_path(g: Graph, k: int) -> bool:
    """Whether g has an induced path on k vertices."""
    if k <= 1:
        return g.n >= k
    adj = g.adj

    def extend(last: int, used: int, inner: int, length: int) -> bool:
        if length == k:
            return True
        for u in bits(adj[last] & ~used):
            if adj[u] & inner:
                continue
            if extend(u, used | 1 << u, inner | 1 << last, length + 1):
                return True
        return False

    return any(extend(s, 1 << s, 0, 1) for s in range(g.n))


def has_induced_cycle_at_least(g: Graph, k: int) -> bool:
    """Whether g has an induced cycle of length >= k (k >= 3), rooted at its smallest vertex."""
    adj = g.adj
    k = max(k, 3)

    def extend(s: int, last: int, used: int, inner: int, length: int) -> bool:
        for u in bits(adj[last] & ~used):
            if u < s or adj[u] & inner:
                continue
            if adj[u] >> s & 1:
                if length >= 2 and length + 1 >= k:
                    return True
                continue
            if extend(s, u, used | 1 << u, inner | 1 << last, length + 1):
                return True
        return False

    for s in range(g.n):
        for p in bits(adj[s]):
            if p > s and extend(s, p, (1 << s) | (1 << p), 0, 2):
                return True
    return False


def verify_structure(g: Graph, check: str, k: int | None = None, limit: int = STRUCTURE_LIMIT) -> bool:
    """Exhaustive forbidden-structure checks.

    ``check`` is one of ``no-induced-path-k``, ``no-induced-cycle-ge-k``,
    ``no-induced-cocycle-ge-k`` (``k`` required) and ``is-cograph``.
    """
    if g.n > limit:
        raise ValueError(f"structure checks accept at most {limit} vertices, got {g.n}")
    if check == "is-cograph":
        return not has_induced_path(g, 4)
    if k is None:
        raise ValueError(f"check {check!r} needs k")
    if check == "no-induced-path-k":
        return not has_induced_path(g, k)
    if check == "no-induced-cycle-ge-k":
        return not has_induced_cycle_at_least(g, k)
    if check == "no-induced-cocycle-ge-k":
        return not has_induced_cycle_at_least(g.complement_graph(), k)
    raise ValueError(f"unknown structure check {check!r}")
