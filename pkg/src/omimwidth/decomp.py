"""Branch decompositions, tree decompositions and conversions between them.

Branch decompositions are unrooted cubic trees whose leaves are in bijection
with the graph's vertices.  Node ids are ``0..N-1``; the usual convention
(followed by every constructor here) is that vertex ``v`` sits on leaf ``v``.
On disk a branch decomposition is JSON::

    {"schema": 1, "parent": [...], "leaf_of": [...]}

where ``parent[i]`` is the parent of node ``i`` after rooting the tree
anywhere (``-1`` for that root) and ``leaf_of[v]`` is the leaf of vertex ``v``.

Tree decompositions use the PACE ``.td`` text format: a header
``s td <#bags> <maxbag> <n>``, bag lines ``b i v1 v2 ...`` (bag ids and
vertices 1-indexed) and one ``i j`` line per tree edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .cuts import Cut, CutKind, cut_value
from .graph import Graph, bits, connected_components, to_list, to_mask


class InvalidDecomposition(ValueError):
    """A decomposition violating one of its defining conditions."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)


class DecompositionFormatError(ValueError):
    pass


def _tree_check(nodes: Iterable[int], edges: list[tuple[int, int]]) -> dict[int, list[int]]:
    nodes = list(nodes)
    adjacency: dict[int, list[int]] = {v: [] for v in nodes}
    for p, q in edges:
        if p not in adjacency or q not in adjacency:
            raise InvalidDecomposition("tree", f"edge ({p}, {q}) uses an unknown node")
        if p == q:
            raise InvalidDecomposition("tree", f"loop at node {p}")
        adjacency[p].append(q)
        adjacency[q].append(p)
    if not nodes:
        raise InvalidDecomposition("tree", "no nodes")
    if len(edges) != len(nodes) - 1:
        raise InvalidDecomposition("tree", f"{len(nodes)} nodes but {len(edges)} edges")
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nodes):
        raise InvalidDecomposition("tree", "not connected")
    return adjacency


@dataclass
class BranchDecomposition:
    adjacency: dict[int, list[int]]
    leaf_of: tuple[int, ...]

    def __post_init__(self):
        self.leaf_of = tuple(self.leaf_of)
        n = len(self.leaf_of)
        if n < 2:
            raise InvalidDecomposition("size", "branch decompositions need at least two vertices")
        nodes = sorted(self.adjacency)
        if nodes != list(range(len(nodes))):
            raise InvalidDecomposition("node-ids", "node ids must be 0..N-1")
        edges = sorted({(min(p, q), max(p, q)) for p in nodes for q in self.adjacency[p]})
        self.adjacency = _tree_check(nodes, edges)
        leaves = {x for x in nodes if len(self.adjacency[x]) == 1}
        for x in nodes:
            if len(self.adjacency[x]) not in (1, 3):
                raise InvalidDecomposition("cubic", f"node {x} has degree {len(self.adjacency[x])}")
        if set(self.leaf_of) != leaves or len(set(self.leaf_of)) != n:
            raise InvalidDecomposition("leaf-map", "leaf_of is not a bijection onto the leaves")

    @property
    def n(self) -> int:
        return len(self.leaf_of)

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(p, q), max(p, q)) for p in self.adjacency for q in self.adjacency[p]})

    def cuts(self) -> list[tuple[tuple[int, int], int]]:
        """Each tree edge with the vertex set on the side of its smaller endpoint."""
        vertex_at = {leaf: v for v, leaf in enumerate(self.leaf_of)}
        root = 0
        parent = {root: -1}
        order = [root]
        for x in order:
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        below = {}
        for x in reversed(order):
            mask = 1 << vertex_at[x] if x in vertex_at else 0
            for y in self.adjacency[x]:
                if parent.get(y) == x:
                    mask |= below[y]
            below[x] = mask
        full = (1 << self.n) - 1
        out = []
        for p, q in self.edges():
            child = q if parent[q] == p else p
            side = below[child] if child == p else full & ~below[child]
            out.append(((p, q), side))
        return out

    def to_json(self) -> dict:
        parent = [-1] * len(self.adjacency)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    stack.append(y)
        return {"schema": 1, "parent": parent, "leaf_of": list(self.leaf_of)}

    @classmethod
    def from_json(cls, data: dict) -> BranchDecomposition:
        try:
            parent = [int(p) for p in data["parent"]]
            leaf_of = [int(x) for x in data["leaf_of"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DecompositionFormatError(f"bad branch decomposition JSON: {exc}") from None
        adjacency: dict[int, list[int]] = {i: [] for i in range(len(parent))}
        for i, p in enumerate(parent):
            if p == -1:
                continue
            if p not in adjacency:
                raise DecompositionFormatError(f"parent {p} of node {i} does not exist")
            adjacency[i].append(p)
            adjacency[p].append(i)
        return cls(adjacency, tuple(leaf_of))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], leaf_of: Iterable[int]) -> BranchDecomposition:
        adjacency: dict[int, list[int]] = {}
        for p, q in edges:
            adjacency.setdefault(p, []).append(q)
            adjacency.setdefault(q, []).append(p)
        return cls(adjacency, tuple(leaf_of))


def single_edge_decomposition() -> BranchDecomposition:
    return BranchDecomposition({0: [1], 1: [0]}, (0, 1))


def caterpillar(order: list[int]) -> BranchDecomposition:
    """Linear branch decomposition following ``order`` (leaf ``v`` holds vertex ``v``)."""
    n = len(order)
    if n == 2:
        return BranchDecomposition.from_edges([(order[0], order[1])], range(2))
    spine = list(range(n, 2 * n - 2))
    edges = [(order[0], spine[0]), (order[-1], spine[-1])]
    for i, s in enumerate(spine):
        edges.append((order[i + 1], s))
        if i + 1 < len(spine):
            edges.append((s, spine[i + 1]))
    return BranchDecomposition.from_edges(edges, range(n))


def from_nested(tree) -> BranchDecomposition:
    """Build from a nested pair structure such as ``((0, 1), (2, 3))``.

    The outermost pair is the subdivided root; it is suppressed so the
    result is cubic.
    """
    edges = []
    counter = []
    leaves = []

    def build(t) -> int:
        if isinstance(t, int):
            leaves.append(t)
            return t
        left, right = t
        lid, rid = build(left), build(right)
        counter.append(None)
        me = -len(counter)
        edges.extend([(me, lid), (me, rid)])
        return me

    top = build(tree)
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise ValueError("leaves must be 0..n-1")
    # suppress the root, which has degree 2
    kids = [q for p, q in edges if p == top]
    edges = [e for e in edges if e[0] != top]
    edges.append((kids[0], kids[1]))
    ids = {}
    for p, q in edges:
        for x in (p, q):
            if x < 0 and x not in ids:
                ids[x] = n + len(ids)
    return BranchDecomposition.from_edges(
        [(ids.get(p, p), ids.get(q, q)) for p, q in edges], range(n))


def random_branch_decomposition(n: int, rng) -> BranchDecomposition:
    """Uniform-ish random cubic tree by inserting leaves into random edges."""
    if n < 2:
        raise ValueError("need at least two vertices")
    edges = [(0, 1)]
    nxt = n
    for v in range(2, n):
        i = rng.randrange(len(edges))
        p, q = edges[i]
        s = nxt
        nxt += 1
        edges[i] = (p, s)
        edges.extend([(s, q), (s, v)])
    return BranchDecomposition.from_edges(edges, range(n))


@dataclass
class RootedBranchDecomposition:
    """A branch decomposition rooted at a node subdividing one of its edges."""

    base: BranchDecomposition
    root: int
    children: dict[int, tuple[int, ...]]
    below: dict[int, int]
    vertex_at: dict[int, int]

    def postorder(self) -> list[int]:
        order = [self.root]
        for x in order:
            order.extend(self.children[x])
        return order[::-1]


def root_decomposition(bd: BranchDecomposition, edge: tuple[int, int] | None = None) -> RootedBranchDecomposition:
    p, q = edge if edge is not None else bd.edges()[0]
    root = len(bd.adjacency)
    adjacency = {x: list(ys) for x, ys in bd.adjacency.items()}
    adjacency[p] = [root if y == q else y for y in adjacency[p]]
    adjacency[q] = [root if y == p else y for y in adjacency[q]]
    adjacency[root] = [p, q]
    vertex_at = {leaf: v for v, leaf in enumerate(bd.leaf_of)}
    children: dict[int, tuple[int, ...]] = {}
    order = [root]
    parent = {root: -1}
    for x in order:
        kids = tuple(y for y in adjacency[x] if y != parent[x])
        children[x] = kids
        for y in kids:
            parent[y] = x
            order.append(y)
    below = {}
    for x in reversed(order):
        mask = 1 << vertex_at[x] if x in vertex_at else 0
        for y in children[x]:
            mask |= below[y]
        below[x] = mask
    return RootedBranchDecomposition(bd, root, children, below, vertex_at)


def _check_fits(g: Graph, bd: BranchDecomposition) -> None:
    if bd.n != g.n:
        raise InvalidDecomposition("leaf-map", f"decomposition has {bd.n} leaves, graph has {g.n} vertices")


def bd_width(g: Graph, bd: BranchDecomposition, kind: CutKind | str, cap: int) -> int | None:
    """Maximum cut value over the tree edges, or None if some edge exceeds ``cap``."""
    _check_fits(g, bd)
    width = 0
    seen = set()
    for _, a in bd.cuts():
        if a in seen:
            continue
        seen.add(a)
        report = cut_value(Cut(g, a), kind, cap)
        if report.exceeds:
            return None
        width = max(width, report.value)
    return width


def exact_bd_width(g: Graph, bd: BranchDecomposition, kind: CutKind | str) -> int:
    cap = 1
    while True:
        w = bd_width(g, bd, kind, cap)
        if w is not None:
            return w
        cap *= 2


def balanced_cut(g: Graph, bd: BranchDecomposition, x: int, kind: CutKind | str, cap: int) -> Cut:
    """Walk down from a subdivided root until at most 2/3 of ``x`` lies below."""
    size = x.bit_count()
    if size < 2:
        raise ValueError("balanced cut needs |x| >= 2")
    _check_fits(g, bd)
    rbd = root_decomposition(bd)
    t = rbd.root
    while 3 * (rbd.below[t] & x).bit_count() >= 2 * size:
        t = max(rbd.children[t], key=lambda c: (rbd.below[c] & x).bit_count())
    cut = Cut(g, rbd.below[t])
    if cut_value(cut, kind, cap).exceeds:
        raise ValueError(f"decomposition edge exceeds cap {cap}; width precondition violated")
    return cut


# ---------------------------------------------------------------- tree decompositions


@dataclass
class TreeDecomposition:
    bags: dict[int, int]
    edges: list[tuple[int, int]] = field(default_factory=list)

    def adjacency(self) -> dict[int, list[int]]:
        return _tree_check(sorted(self.bags), [tuple(e) for e in self.edges])

    def validate(self, g: Graph) -> None:
        """Raise :class:`InvalidDecomposition` naming the first violated condition."""
        adjacency = self.adjacency()
        for t, bag in self.bags.items():
            if bag & ~g.all:
                raise InvalidDecomposition("vertex-range", f"bag {t} has vertices outside the graph")
        for u, v in g.edges():
            pair = (1 << u) | (1 << v)
            if not any(bag & pair == pair for bag in self.bags.values()):
                raise InvalidDecomposition("edge-coverage", f"edge ({u}, {v}) is in no bag")
        for v in range(g.n):
            holders = {t for t, bag in self.bags.items() if bag >> v & 1}
            if not holders:
                raise InvalidDecomposition("vertex-coverage", f"vertex {v} is in no bag")
            start = next(iter(holders))
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adjacency[x]:
                    if y in holders and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != holders:
                raise InvalidDecomposition("connectivity", f"bags holding vertex {v} are not connected")

    def is_valid(self, g: Graph) -> bool:
        try:
            self.validate(g)
        except InvalidDecomposition:
            return False
        return True

    def max_bag(self) -> int:
        return max((b.bit_count() for b in self.bags.values()), default=0)


def single_bag(g: Graph) -> TreeDecomposition:
    return TreeDecomposition({0: g.all}, [])


def min_fill_decomposition(g: Graph) -> TreeDecomposition:
    """Heuristic tree decomposition from networkx's min-fill-in elimination."""
    from networkx.algorithms.approximation import treewidth_min_fill_in

    if g.n == 0:
        return TreeDecomposition({0: 0}, [])
    _, tree = treewidth_min_fill_in(g.to_networkx())
    ids = {bag: i for i, bag in enumerate(sorted(tree.nodes, key=lambda b: sorted(b)))}
    bags = {i: to_mask(bag) for bag, i in ids.items()}
    edges = sorted((min(ids[p], ids[q]), max(ids[p], ids[q])) for p, q in tree.edges)
    return TreeDecomposition(bags, edges)


def parse_td(text: str) -> TreeDecomposition:
    header = None
    bags: dict[int, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if len(parts) != 5 or parts[1] != "td" or header is not None:
                    raise DecompositionFormatError(f"line {lineno}: expected one 's td <#bags> <maxbag> <n>'")
                header = tuple(int(p) for p in parts[2:])
            elif parts[0] == "b":
                if header is None:
                    raise DecompositionFormatError(f"line {lineno}: bag before header")
                bag_id = int(parts[1])
                if bag_id in bags:
                    raise DecompositionFormatError(f"line {lineno}: duplicate bag {bag_id}")
                vs = [int(v) - 1 for v in parts[2:]]
                if any(not 0 <= v < header[2] for v in vs):
                    raise DecompositionFormatError(f"line {lineno}: vertex out of range")
                bags[bag_id] = to_mask(vs)
            else:
                if header is None or len(parts) != 2:
                    raise DecompositionFormatError(f"line {lineno}: expected a tree edge 'i j'")
                edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            if isinstance(exc, DecompositionFormatError):
                raise
            raise DecompositionFormatError(f"line {lineno}: non-integer field") from None
    if header is None:
        raise DecompositionFormatError("missing 's td' header")
    if len(bags) != header[0]:
        raise DecompositionFormatError(f"header declares {header[0]} bags, found {len(bags)}")
    return TreeDecomposition(bags, edges)


def format_td(td: TreeDecomposition, n: int) -> str:
    ids = {t: i + 1 for i, t in enumerate(sorted(td.bags))}
    lines = [f"s td {len(td.bags)} {td.max_bag()} {n}"]
    for t in sorted(td.bags):
        lines.append(" ".join(["b", str(ids[t])] + [str(v + 1) for v in bits(td.bags[t])]))
    for p, q in td.edges:
        lines.append(f"{ids[p]} {ids[q]}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class NiceNode:
    kind: str  # leaf | introduce | forget | join
    bag: int
    children: tuple[int, ...]
    vertex: int | None = None


@dataclass
class NiceTreeDecomposition:
    nodes: list[NiceNode]
    root: int

    def as_tree_decomposition(self) -> TreeDecomposition:
        bags = {i: node.bag for i, node in enumerate(self.nodes)}
        edges = [(i, c) for i, node in enumerate(self.nodes) for c in node.children]
        return TreeDecomposition(bags, edges)

    def forget_node(self) -> dict[int, int]:
        out = {}
        for i, node in enumerate(self.nodes):
            if node.kind == "forget":
                if node.vertex in out:
                    raise InvalidDecomposition("nice", f"vertex {node.vertex} forgotten twice")
                out[node.vertex] = i
        return out

    def check_nice(self) -> None:
        if self.nodes[self.root].bag:
            raise InvalidDecomposition("nice", "root bag is not empty")
        for i, node in enumerate(self.nodes):
            kids = [self.nodes[c] for c in node.children]
            if node.kind == "leaf":
                ok = not kids and node.bag == 0
            elif node.kind == "introduce":
                ok = (len(kids) == 1 and node.vertex is not None
                      and node.bag == kids[0].bag | (1 << node.vertex)
                      and not kids[0].bag >> node.vertex & 1)
            elif node.kind == "forget":
                ok = (len(kids) == 1 and node.vertex is not None
                      and kids[0].bag == node.bag | (1 << node.vertex)
                      and not node.bag >> node.vertex & 1)
            elif node.kind == "join":
                ok = len(kids) == 2 and all(k.bag == node.bag for k in kids)
            else:
                ok = False
            if not ok:
                raise InvalidDecomposition("nice", f"node {i} is not a valid {node.kind} node")


def make_nice(td: TreeDecomposition, g: Graph | None = None) -> NiceTreeDecomposition:
    """Nice tree decomposition whose every bag is a subset of some input bag.

    Rooted at the smallest bag id.  Each tree edge becomes a chain that first
    forgets the child's extra vertices and then introduces the parent's, and
    nodes with several children are binarized into join nodes.
    """
    if g is not None:
        td.validate(g)
    adjacency = td.adjacency()
    nodes: list[NiceNode] = []

    def add(kind, bag, children=(), vertex=None) -> int:
        nodes.append(NiceNode(kind, bag, tuple(children), vertex))
        return len(nodes) - 1

    def chain(node: int, start: int, goal: int) -> int:
        bag = start
        for v in bits(start & ~goal):
            bag &= ~(1 << v)
            node = add("forget", bag, (node,), v)
        for v in bits(goal & ~start):
            bag |= 1 << v
            node = add("introduce", bag, (node,), v)
        return node

    root = min(td.bags)
    parent = {root: None}
    order = [root]
    for x in order:
        for y in sorted(adjacency[x]):
            if y not in parent:
                parent[y] = x
                order.append(y)
    built: dict[int, int] = {}
    for t in reversed(order):
        bag = td.bags[t]
        kids = [y for y in sorted(adjacency[t]) if parent.get(y) == t]
        branches = [chain(built[c], td.bags[c], bag) for c in kids]
        if not branches:
            branches = [chain(add("leaf", 0), 0, bag)]
        top = branches[0]
        for other in branches[1:]:
            top = add("join", bag, (top, other))
        built[t] = top
    top = chain(built[root], td.bags[root], 0)
    return NiceTreeDecomposition(nodes, top)


def td_to_bd(g: Graph, td: TreeDecomposition) -> BranchDecomposition:
    """Branch decomposition where each cut has N(A) or N(Abar) inside a bag.

    A leaf for vertex ``v`` hangs off the nice node forgetting ``v``; leaves
    holding no vertex are pruned and degree-2 nodes suppressed, to fixpoint.
    """
    if g.n < 2:
        raise ValueError("branch decompositions need at least two vertices")
    nice = make_nice(td, g)
    n = g.n
    adjacency: dict[int, set[int]] = {n + i: set() for i in range(len(nice.nodes))}
    for i, node in enumerate(nice.nodes):
        for c in node.children:
            adjacency[n + i].add(n + c)
            adjacency[n + c].add(n + i)
    for v, f in nice.forget_node().items():
        adjacency[v] = {n + f}
        adjacency[n + f].add(v)
    changed = True
    while changed:
        changed = False
        for x in sorted(adjacency):
            if x >= n and len(adjacency[x]) <= 1:
                for y in adjacency.pop(x):
                    adjacency[y].discard(x)
                changed = True
    for x in sorted(adjacency):
        if x >= n and len(adjacency[x]) == 2:
            p, q = adjacency.pop(x)
            adjacency[p].discard(x)
            adjacency[q].discard(x)
            adjacency[p].add(q)
            adjacency[q].add(p)
    internal = sorted(x for x in adjacency if x >= n)
    ids = {x: x for x in range(n)}
    ids.update({x: n + i for i, x in enumerate(internal)})
    return BranchDecomposition({ids[x]: sorted(ids[y] for y in ys) for x, ys in adjacency.items()},
                               tuple(range(n)))


def bag_containment_holds(g: Graph, td: TreeDecomposition, bd: BranchDecomposition) -> bool:
    """Every cut (A, Abar) of ``bd`` has N(A) or N(Abar) inside one bag."""
    bags = list(td.bags.values())
    for _, a in bd.cuts():
        na, nb = g.neighborhood(a), g.neighborhood(g.all & ~a)
        if not any(na & ~bag == 0 or nb & ~bag == 0 for bag in bags):
            return False
    return True


# ---------------------------------------------------------------- bag measures


def independence_number(g: Graph, x: int) -> int:
    if not x:
        return 0
    adj = g.adj
    v = max(bits(x), key=lambda u: (adj[u] & x).bit_count())
    if not adj[v] & x:
        # every remaining vertex is isolated in g[x]
        return x.bit_count()
    return max(1 + independence_number(g, x & ~g.closed(v)), independence_number(g, x & ~(1 << v)))


def max_induced_matching(g: Graph, edges: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Largest subset of ``edges`` forming an induced matching of ``g``."""
    reach = [g.closed(u) | g.closed(v) for u, v in edges]
    ends = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)
    best: list[int] = []
    chosen: list[int] = []

    def grow(start: int, blocked: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        for i in range(start, m):
            if len(chosen) + (m - i) <= len(best):
                return
            if ends[i] & blocked:
                continue
            chosen.append(i)
            grow(i + 1, blocked | reach[i])
            chosen.pop()

    grow(0, 0)
    return tuple(edges[i] for i in best)


def mu(g: Graph, x: int) -> int:
    """Largest induced matching of ``g`` whose every edge touches ``x``."""
    edges = [(u, v) for u, v in g.edges() if (x >> u & 1) or (x >> v & 1)]
    return len(max_induced_matching(g, edges))


def td_independence(g: Graph, td: TreeDecomposition) -> int:
    return max(independence_number(g, bag) for bag in td.bags.values())


def td_mu(g: Graph, td: TreeDecomposition) -> int:
    return max(mu(g, bag) for bag in td.bags.values())


class Certificate(NamedTuple):
    holds: bool
    width: int
    bound: int

    def __bool__(self) -> bool:
        return self.holds


def certify_omim_le_tin(g: Graph, td: TreeDecomposition) -> Certificate:
    """o-mim-width of ``td_to_bd(td)`` against the independence number of ``td``."""
    bd = td_to_bd(g, td)
    bound = td_independence(g, td)
    width = exact_bd_width(g, bd, CutKind.OMIM)
    return Certificate(width <= bound, width, bound)


def certify_sim_le_tmm(g: Graph, td: TreeDecomposition) -> Certificate:
    bd = td_to_bd(g, td)
    bound = td_mu(g, td)
    width = exact_bd_width(g, bd, CutKind.SIM)
    return Certificate(width <= bound, width, bound)


# ---------------------------------------------------------------- exact branchwidth

BRUTE_BRANCHWIDTH_LIMIT = 10


def _edge_sides(edges: list[tuple[int, int]], size: int) -> list[int]:
    adjacency: dict[int, list[int]] = {}
    for p, q in edges:
        adjacency.setdefault(p, []).append(q)
        adjacency.setdefault(q, []).append(p)
    parent = {0: -1}
    order = [0]
    for x in order:
        for y in adjacency[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    below = {}
    for x in reversed(order):
        mask = 1 << x if x < size else 0
        for y in adjacency[x]:
            if parent.get(y) == x:
                mask |= below[y]
        below[x] = mask
    return [below[q] if parent[q] == p else below[p] for p, q in edges]


def brute_force_branchwidth(g: Graph, kind: CutKind | str, cap: int | None = None,
                            limit: int = BRUTE_BRANCHWIDTH_LIMIT) -> tuple[int | None, BranchDecomposition | None]:
    """Minimum width over every branch decomposition, with a witness.

    Trees are generated by inserting leaf ``i`` into every edge of each tree
    on leaves ``0..i-1``.  Cut values only grow as vertices are added, so a
    partial tree already as wide as the best complete one is abandoned.
    Returns ``(None, None)`` when the width exceeds ``cap``.  Graphs with
    fewer than two vertices have width 0 and no decomposition.
    """
    kind = CutKind(kind)
    n = g.n
    if n > limit:
        raise ValueError(f"exhaustive branchwidth accepts at most {limit} vertices, got {n}")
    if n < 2:
        return 0, None
    prefixes = [g.prefix(i) for i in range(n + 1)]
    best = (n // 2 + 1) if cap is None else cap + 1
    best_edges: list[tuple[int, int]] | None = None

    def width_of(edges, size) -> int | None:
        h = prefixes[size]
        w = 0
        for a in _edge_sides(edges, size):
            r = cut_value(Cut(h, a), kind, best - 1)
            if r.exceeds:
                return None
            w = max(w, r.value)
        return w

    def extend(edges: list[tuple[int, int]], size: int, nxt: int) -> None:
        nonlocal best, best_edges
        if best == 0:
            return
        w = width_of(edges, size)
        if w is None:
            return
        if size == n:
            best, best_edges = w, list(edges)
            return
        for i in range(len(edges)):
            p, q = edges[i]
            grown = edges[:i] + [(p, nxt), (nxt, q), (nxt, size)] + edges[i + 1:]
            extend(grown, size + 1, nxt + 1)

    if n == 2:
        extend([(0, 1)], 2, n)
    else:
        extend([(0, n), (1, n), (2, n)], 3, n + 1)
    if best_edges is None:
        return None, None
    return best, BranchDecomposition.from_edges(best_edges, range(n))


def components_of(g: Graph) -> list[list[int]]:
    return [to_list(c) for c in connected_components(g)]


def load_bd(text: str) -> BranchDecomposition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecompositionFormatError(f"branch decomposition is not JSON: {exc}") from None
    return BranchDecomposition.from_json(data)
