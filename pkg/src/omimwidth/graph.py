"""Immutable simple graphs with bitmask vertex sets.

Vertices are the integers ``0..n-1``.  A vertex set is a plain ``int`` used as
a bit set (bit ``v`` set iff ``v`` is a member), so union, intersection and
complement are the usual bitwise operators.  Induced subgraphs are never
re-indexed: they are passed around as ``(graph, mask)`` pairs so that vertex
identities survive recursion.

Two text formats are understood by :func:`parse_graph`:

* edge list: first line ``n m``, then ``m`` lines ``u v`` with 0-indexed
  vertices;
* DIMACS-like: a line ``p edge n m`` followed by ``e u v`` lines with
  1-indexed vertices.

In both formats an optional line ``w v k`` sets the weight of vertex ``v``
to the non-negative integer ``k`` (``v`` uses the same index base as the
edges).  Lines starting with ``c`` or ``#`` are comments, blank lines are
ignored.  Self-loops, repeated edges, out-of-range vertices and an edge count
that disagrees with the header are rejected.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, Sequence

MAX_EXACT_VERTICES = 128
MAX_TOTAL_WEIGHT = 1 << 60


class GraphFormatError(ValueError):
    """Malformed graph text."""


class NotCrossingMatching(ValueError):
    """An edge set that is not a matching across the given cut."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(mask: int) -> list[int]:
    return list(bits(mask))


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key ordering vertex sets lexicographically by sorted members."""
    return tuple(bits(mask))


class Graph:
    """A simple undirected graph with non-negative integer vertex weights.

    ``adj[v]`` is the neighbour bit set of ``v``.  Instances are immutable and
    hashable, so they can key caches.
    """

    __slots__ = ("n", "adj", "weights", "_hash")

    def __init__(self, n: int, adj: Sequence[int], weights: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError("adjacency length differs from vertex count")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if weights is None:
            weights = (1,) * n
        if len(weights) != n:
            raise ValueError("weight vector length differs from vertex count")
        if any(w < 0 for w in weights):
            raise ValueError("vertex weights must be non-negative")
        if sum(weights) > MAX_TOTAL_WEIGHT:
            raise ValueError("total weight exceeds 2**60")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "weights", tuple(int(w) for w in weights))
        object.__setattr__(self, "_hash", hash((n, self.adj, self.weights)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   weights: Sequence[int] | None = None) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, weights)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.weights == other.weights

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def all(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self, within: int | None = None) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` inside ``within``, sorted."""
        within = self.all if within is None else within
        out = []
        for u in bits(within):
            for v in bits(self.adj[u] & within & ~((2 << u) - 1)):
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, within: int | None = None) -> int:
        nb = self.adj[v] if within is None else self.adj[v] & within
        return nb.bit_count()

    def union_adj(self, mask: int) -> int:
        """Union of the neighbourhoods of the members of ``mask``."""
        out = 0
        adj = self.adj
        while mask:
            low = mask & -mask
            out |= adj[low.bit_length() - 1]
            mask ^= low
        return out

    def neighborhood(self, mask: int) -> int:
        """Open neighbourhood N(U) = union of N(x) minus U."""
        return self.union_adj(mask) & ~mask

    def closed_neighborhood(self, mask: int) -> int:
        return self.union_adj(mask) | mask

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def weight(self, mask: int) -> int:
        w = self.weights
        return sum(w[v] for v in bits(mask))

    def complement_set(self, mask: int) -> int:
        return self.all & ~mask

    def edge_count(self, mask: int) -> int:
        adj = self.adj
        return sum((adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def prefix(self, k: int) -> Graph:
        """The subgraph induced by vertices ``0..k-1`` (ids unchanged)."""
        keep = (1 << k) - 1
        return Graph(k, [self.adj[v] & keep for v in range(k)], self.weights[:k])

    def complement_graph(self) -> Graph:
        full = self.all
        return Graph(self.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)],
                     self.weights)

    def with_weights(self, weights: Sequence[int]) -> Graph:
        return Graph(self.n, self.adj, weights)

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h


def require_exact_size(g: Graph, limit: int = MAX_EXACT_VERTICES) -> None:
    if g.n > limit:
        raise ValueError(f"graph has {g.n} vertices; exact engines accept at most {limit}")


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]``, ordered by smallest vertex."""
    rest = g.all if within is None else within
    adj = g.adj
    comps = []
    while rest:
        frontier = rest & -rest
        comp = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph, within: int) -> bool:
    if not within:
        return True
    low = within & -within
    comp = low
    frontier = low
    adj = g.adj
    while frontier:
        b = frontier & -frontier
        frontier ^= b
        new = adj[b.bit_length() - 1] & within & ~comp
        comp |= new
        frontier |= new
    return comp == within


def is_independent(g: Graph, x: int) -> bool:
    adj = g.adj
    rest = x
    while rest:
        low = rest & -rest
        rest ^= low
        if adj[low.bit_length() - 1] & x:
            return False
    return True


def is_forest(g: Graph, x: int) -> bool:
    """True iff ``g[x]`` is acyclic, i.e. |E(x)| = |x| - #components."""
    if not x:
        return True
    return g.edge_count(x) == x.bit_count() - len(connected_components(g, x))


class MatchingMode(str, Enum):
    """Which graph a crossing matching must be induced in.

    ``TWO_SIDED`` uses G itself, ``ONE_SIDED_A`` uses G minus the edges inside
    the complement of A, ``BIPARTITE`` keeps only the crossing edges.
    """

    TWO_SIDED = "two-sided"
    ONE_SIDED_A = "one-sided-A"
    BIPARTITE = "bipartite-only"


def is_induced_matching(g: Graph, m: Iterable[tuple[int, int]], a: int,
                        mode: MatchingMode | str) -> bool:
    mode = MatchingMode(mode)
    abar = g.all & ~a
    edges = [tuple(e) for e in m]
    seen = 0
    for u, v in edges:
        if not g.has_edge(u, v):
            raise NotCrossingMatching(f"({u}, {v}) is not an edge")
        if not ((a >> u & 1 and abar >> v & 1) or (a >> v & 1 and abar >> u & 1)):
            raise NotCrossingMatching(f"edge ({u}, {v}) does not cross the cut")
        if seen >> u & 1 or seen >> v & 1:
            raise NotCrossingMatching("edges share an endpoint")
        seen |= (1 << u) | (1 << v)
    keep_a = mode in (MatchingMode.TWO_SIDED, MatchingMode.ONE_SIDED_A)
    keep_abar = mode is MatchingMode.TWO_SIDED
    matched = {frozenset(e) for e in edges}
    for u in bits(seen):
        for v in bits(g.adj[u] & seen):
            if v < u or frozenset((u, v)) in matched:
                continue
            if a >> u & 1 and a >> v & 1:
                if keep_a:
                    return False
            elif abar >> u & 1 and abar >> v & 1:
                if keep_abar:
                    return False
            else:
                return False
    return True


def parse_graph(text: str) -> Graph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        lines.append((lineno, line.split()))
    if not lines:
        raise GraphFormatError("empty graph file")
    lineno, head = lines[0]
    if head[0] == "p":
        if len(head) != 4 or head[1] != "edge":
            raise GraphFormatError(f"line {lineno}: expected 'p edge n m'")
        base, tag = 1, "e"
        header = head[2:]
    else:
        if len(head) != 2:
            raise GraphFormatError(f"line {lineno}: expected header 'n m'")
        base, tag = 0, None
        header = head
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer header") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative size in header")
    adj = [0] * n
    weights = [1] * n
    seen_edges = 0

    def vertex(tok: str, ln: int) -> int:
        try:
            v = int(tok) - base
        except ValueError:
            raise GraphFormatError(f"line {ln}: non-integer vertex {tok!r}") from None
        if not 0 <= v < n:
            raise GraphFormatError(f"line {ln}: vertex {tok} out of range")
        return v

    for ln, parts in lines[1:]:
        if parts[0] == "w":
            if len(parts) != 3:
                raise GraphFormatError(f"line {ln}: expected 'w v k'")
            v = vertex(parts[1], ln)
            try:
                k = int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {ln}: non-integer weight") from None
            if k < 0:
                raise GraphFormatError(f"line {ln}: negative weight")
            weights[v] = k
            continue
        if tag is not None:
            if parts[0] != tag:
                raise GraphFormatError(f"line {ln}: expected 'e u v'")
            parts = parts[1:]
        if len(parts) != 2:
            raise GraphFormatError(f"line {ln}: expected an edge 'u v'")
        u, v = vertex(parts[0], ln), vertex(parts[1], ln)
        if u == v:
            raise GraphFormatError(f"line {ln}: self-loop at {parts[0]}")
        if adj[u] >> v & 1:
            raise GraphFormatError(f"line {ln}: repeated edge {parts[0]} {parts[1]}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        seen_edges += 1
    if seen_edges != m:
        raise GraphFormatError(f"header declares {m} edges, found {seen_edges}")
    try:
        return Graph(n, adj, weights)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    """Serialize to the 0-indexed edge-list format (weights only if not all 1)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    out.extend(f"w {v} {w}" for v, w in enumerate(g.weights) if w != 1)
    return "\n".join(out) + "\n"
