"""Cut functions based on induced matchings, the one-sided kernel and controlling vertices.

A cut is a vertex set ``a``; its complement is taken against the owning
graph.  Four matching-based functions are evaluated exactly:

========== ==========================================================
``mim``    crossing matching induced in the bipartite graph G[A, Abar]
``sim``    crossing matching induced in G
``umimA``  crossing matching induced in G minus the edges inside Abar
``umimAbar`` crossing matching induced in G minus the edges inside A
``omim``   min(umimA, umimAbar)
========== ==========================================================

Every evaluation takes a cap.  The search only decides values up to
``cap + 1``, which is what width checks need; :func:`cut_width` doubles the
cap to get an exact value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .graph import Graph, bits, is_independent


class CutKind(str, Enum):
    MIM = "mim"
    SIM = "sim"
    UMIM_A = "umimA"
    UMIM_ABAR = "umimAbar"
    OMIM = "omim"


# (edges inside A block the matching, edges inside Abar block the matching)
_MODE_FLAGS = {
    CutKind.MIM: (False, False),
    CutKind.SIM: (True, True),
    CutKind.UMIM_A: (True, False),
    CutKind.UMIM_ABAR: (False, True),
}


@dataclass(frozen=True)
class Cut:
    graph: Graph
    a: int

    def __post_init__(self):
        if self.a & ~self.graph.all:
            raise ValueError("cut side contains vertices outside the graph")

    @property
    def abar(self) -> int:
        return self.graph.all & ~self.a

    def swapped(self) -> Cut:
        return Cut(self.graph, self.abar)

    def crossing_edges(self) -> list[tuple[int, int]]:
        g, a = self.graph, self.a
        out = []
        for u, v in g.edges():
            if (a >> u & 1) != (a >> v & 1):
                out.append((u, v))
        return out


@dataclass(frozen=True)
class CutValueReport:
    """``value`` is None when the function exceeds the cap."""

    value: int | None
    witness: tuple[tuple[int, int], ...] | None
    cap: int

    @property
    def exceeds(self) -> bool:
        return self.value is None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exceeds_cap": self.exceeds,
            "cap": self.cap,
            "witness": [list(e) for e in self.witness] if self.witness is not None else None,
        }


@lru_cache(maxsize=1 << 18)
def _max_matching(g: Graph, a: int, block_a: bool, block_abar: bool,
                  limit: int) -> tuple[tuple[int, int], ...]:
    """Lexicographically first maximum induced crossing matching, stopping at ``limit``.

    Inducedness is hereditary, so the search extends matchings edge by edge in
    lexicographic edge order and never revisits a rejected prefix.
    """
    abar = g.all & ~a
    adj = g.adj
    edges = Cut(g, a).crossing_edges()
    # closed neighbourhood of an endpoint in the mode graph
    reach = []
    for u, v in edges:
        r = 0
        for x in (u, v):
            side, other = (a, abar) if a >> x & 1 else (abar, a)
            keep_same = block_a if side == a else block_abar
            r |= (1 << x) | (adj[x] & other)
            if keep_same:
                r |= adj[x] & side
        reach.append(r)
    ends = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)
    best: list[int] = []
    chosen: list[int] = []

    def grow(start: int, blocked: int) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
            if len(best) >= limit:
                return True
        for i in range(start, m):
            if len(chosen) + (m - i) <= len(best):
                return False
            if ends[i] & blocked:
                continue
            chosen.append(i)
            if grow(i + 1, blocked | reach[i]):
                return True
            chosen.pop()
        return False

    if limit > 0:
        grow(0, 0)
    return tuple(edges[i] for i in best)


def cut_value(cut: Cut, kind: CutKind | str, cap: int) -> CutValueReport:
    """Exact value of ``kind`` on ``cut`` if it is at most ``cap``."""
    kind = CutKind(kind)
    if cap < 0:
        raise ValueError("cap must be non-negative")
    g, a = cut.graph, cut.a
    if kind is CutKind.OMIM:
        left = cut_value(cut, CutKind.UMIM_A, cap)
        right = cut_value(cut, CutKind.UMIM_ABAR, cap)
        options = [r for r in (left, right) if not r.exceeds]
        if not options:
            return CutValueReport(None, None, cap)
        pick = min(options, key=lambda r: r.value)
        return CutValueReport(pick.value, pick.witness, cap)
    if a == 0 or a == g.all:
        return CutValueReport(0, (), cap)
    block_a, block_abar = _MODE_FLAGS[kind]
    found = _max_matching(g, a, block_a, block_abar, cap + 1)
    if len(found) > cap:
        return CutValueReport(None, None, cap)
    return CutValueReport(len(found), found, cap)


def cut_width(cut: Cut, kind: CutKind | str) -> int:
    """Unbounded exact value, by doubling the cap."""
    cap = 1
    while True:
        report = cut_value(cut, kind, cap)
        if not report.exceeds:
            return report.value
        cap *= 2


def mode_for(kind: CutKind | str) -> str:
    """The :class:`~omimwidth.graph.MatchingMode` name matching a cut kind on side A."""
    kind = CutKind(kind)
    modes = {
        CutKind.MIM: "bipartite-only",
        CutKind.SIM: "two-sided",
        CutKind.UMIM_A: "one-sided-A",
    }
    if kind not in modes:
        raise ValueError(f"{kind.value} has no single matching mode on side A")
    return modes[kind]


def _two_colour(g: Graph, x: int) -> tuple[int, int]:
    left = right = 0
    adj = g.adj
    rest = x
    while rest:
        start = rest & -rest
        left |= start
        frontier = start
        seen = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            nb = adj[v] & x
            if (left >> v & 1 and nb & left) or (right >> v & 1 and nb & right):
                raise ValueError("set is not a union of two independent sets")
            new = nb & ~seen
            if left >> v & 1:
                right |= new
            else:
                left |= new
            seen |= new
            frontier |= new
        rest &= ~seen
    return left, right


def _shrink(g: Graph, a: int, part: int) -> int:
    outside = ~a & g.all
    target = g.union_adj(part) & outside
    changed = True
    while changed:
        changed = False
        for u in bits(part):
            if g.union_adj(part & ~(1 << u)) & outside == target:
                part &= ~(1 << u)
                changed = True
    return part


def umim_kernel(cut: Cut, x: int, t: int = 1) -> int:
    """A subset X' of ``x`` with the same neighbourhood outside A and |X'| <= t*umim(A).

    Vertices are greedily deleted while the outside neighbourhood stays put.
    For ``t=2`` the set is first split into two independent sets by
    2-colouring each component of g[x].
    """
    g, a = cut.graph, cut.a
    if x & ~a:
        raise ValueError("kernel input must lie inside the cut side")
    if t == 1:
        if not is_independent(g, x):
            raise ValueError("kernel input with t=1 must be independent")
        parts = [x]
    elif t == 2:
        parts = list(_two_colour(g, x))
    else:
        raise ValueError("t must be 1 or 2")
    out = 0
    for part in parts:
        out |= _shrink(g, a, part)
    return out


def controlled_crossing_edges(cut: Cut, v: int) -> int:
    """Number of crossing edges with an endpoint in N[v]."""
    g = cut.graph
    closed = g.closed(v)
    return sum(1 for e in cut.crossing_edges() if (closed >> e[0] & 1) or (closed >> e[1] & 1))


def find_controlling_vertex(cut: Cut, k: int) -> int:
    """Vertex neighbour-controlling the most crossing edges (smallest id on ties).

    If ``sim(A) <= k`` the count is at least |E(A, Abar)| / 2k; a smaller count
    certifies that the promise was false and raises ``ValueError``.
    """
    edges = cut.crossing_edges()
    if not edges:
        raise ValueError("cut has no crossing edges")
    g = cut.graph
    best_v, best_count = -1, -1
    for v in range(g.n):
        closed = g.closed(v)
        count = sum(1 for p, q in edges if (closed >> p & 1) or (closed >> q & 1))
        if count > best_count:
            best_v, best_count = v, count
    if 2 * k * best_count < len(edges):
        raise ValueError(f"no vertex controls {len(edges)}/(2*{k}) crossing edges; sim(A) > {k}")
    return best_v
