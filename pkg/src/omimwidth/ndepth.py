"""Neighbor-depth: exact computation, the pivot-branching independent set solver,
independent set branching trees, and the sim-width based depth bound.

Neighbor-depth is 0 for the empty graph, the maximum over components for a
disconnected graph, and for a connected graph at most k exactly when some
pivot v has depth(G - N[v]) <= k - 1 and depth(G - v) <= k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .cuts import CutKind
from .decomp import BranchDecomposition, exact_bd_width
from .graph import Graph, bits, connected_components, to_list, to_mask


class Verdict(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class PivotTrace:
    """Witnesses for every (vertex set, k) the decision procedure answered yes to.

    Values are a pivot vertex for connected sets and the component masks for
    disconnected ones.
    """

    records: dict[tuple[int, int], int | tuple[int, ...]] = field(default_factory=dict)

    def to_json(self) -> list[dict]:
        out = []
        for (x, k), how in sorted(self.records.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            rec = {"set": to_list(x), "k": k}
            if isinstance(how, tuple):
                rec["components"] = [to_list(c) for c in how]
            else:
                rec["pivot"] = how
            out.append(rec)
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> PivotTrace:
        trace = cls()
        for rec in data:
            key = (to_mask(rec["set"]), int(rec["k"]))
            if "pivot" in rec:
                trace.records[key] = int(rec["pivot"])
            else:
                trace.records[key] = tuple(to_mask(c) for c in rec["components"])
        return trace


def replay_trace(g: Graph, trace: PivotTrace, x: int, k: int) -> Verdict:
    """Check from the recursive definition alone that depth(g[x]) <= k using the trace."""
    stack = [(x, k)]
    done = set()
    while stack:
        x, k = stack.pop()
        if (x, k) in done or not x:
            continue
        done.add((x, k))
        if k <= 0:
            return Verdict(False, f"nonempty set {to_list(x)} needs depth > 0")
        comps = connected_components(g, x)
        how = trace.records.get((x, k))
        if how is None:
            return Verdict(False, f"no witness recorded for {to_list(x)} at depth {k}")
        if len(comps) > 1:
            if how != tuple(comps):
                return Verdict(False, f"component record for {to_list(x)} is wrong")
            stack.extend((c, k) for c in comps)
        else:
            if isinstance(how, tuple) or not x >> how & 1:
                return Verdict(False, f"pivot for {to_list(x)} is not one of its vertices")
            stack.append((x & ~g.closed(how), k - 1))
            stack.append((x & ~(1 << how), k))
    return Verdict(True)


class NeighborDepth:
    """Memoized decision procedure, shared across depths and subsets of one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[tuple[int, int], bool] = {}
        self.depths: dict[int, int] = {}
        self.trace = PivotTrace()

    def at_most(self, x: int, k: int) -> bool:
        if not x:
            return True
        if k <= 0:
            return False
        key = (x, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        g = self.g
        comps = connected_components(g, x)
        if len(comps) > 1:
            ok = all(self.at_most(c, k) for c in comps)
            if ok:
                self.trace.records[key] = tuple(comps)
        else:
            ok = False
            for v in bits(x):
                if self.at_most(x & ~g.closed(v), k - 1):
                    # depth(x - v) <= depth(x), so the first usable pivot decides
                    ok = self.at_most(x & ~(1 << v), k)
                    if ok:
                        self.trace.records[key] = v
                    break
        self.memo[key] = ok
        return ok

    def depth(self, x: int | None = None) -> int:
        x = self.g.all if x is None else x
        if x not in self.depths:
            k = 0
            while not self.at_most(x, k):
                k += 1
            self.depths[x] = k
        return self.depths[x]

    def pivot(self, x: int) -> int:
        """Recorded pivot witnessing the exact depth of a connected nonempty set."""
        k = self.depth(x)
        how = self.trace.records[(x, k)]
        if isinstance(how, tuple):
            raise ValueError("set is disconnected; it has no pivot")
        return how


def nd_at_most(g: Graph, k: int, within: int | None = None) -> tuple[bool, PivotTrace | None]:
    if k < 0:
        raise ValueError("k must be non-negative")
    solver = NeighborDepth(g)
    ok = solver.at_most(g.all if within is None else within, k)
    return ok, (solver.trace if ok else None)


def neighbor_depth(g: Graph, within: int | None = None) -> int:
    return NeighborDepth(g).depth(within)


def solve_is_nd(g: Graph, solver: NeighborDepth | None = None) -> tuple[int, int]:
    """Max-weight independent set by branching on neighbor-depth pivots.

    Components are solved separately.  In a connected set the pivot v is
    either taken (recurse on X - N[v]) or skipped (recurse on X - v); taking
    wins ties.
    """
    solver = solver or NeighborDepth(g)
    memo: dict[int, tuple[int, int]] = {}

    def solve(x: int) -> tuple[int, int]:
        if not x:
            return 0, 0
        if x in memo:
            return memo[x]
        comps = connected_components(g, x)
        if len(comps) > 1:
            weight = chosen = 0
            for c in comps:
                wc, sc = solve(c)
                weight += wc
                chosen |= sc
            out = (weight, chosen)
        else:
            v = solver.pivot(x)
            w_take, s_take = solve(x & ~g.closed(v))
            w_skip, s_skip = solve(x & ~(1 << v))
            if w_take + g.weights[v] >= w_skip:
                out = (w_take + g.weights[v], s_take | 1 << v)
            else:
                out = (w_skip, s_skip)
        memo[x] = out
        return out

    return solve(g.all)


# ---------------------------------------------------------------- branching trees


@dataclass
class BranchingTree:
    label: int
    kind: str  # leaf | branching | decomposition
    vertex: int | None = None
    children: tuple[BranchingTree, ...] = ()

    @property
    def size(self) -> int:
        count, stack = 0, [self]
        while stack:
            t = stack.pop()
            count += 1
            stack.extend(t.children)
        return count

    def to_json(self) -> dict:
        out = {"label": to_list(self.label), "kind": self.kind}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    @classmethod
    def from_json(cls, data: dict) -> BranchingTree:
        try:
            return cls(to_mask(data["label"]), str(data["kind"]), data.get("vertex"),
                       tuple(cls.from_json(c) for c in data.get("children", [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed branching tree: {exc}") from None


def build_branching_tree(g: Graph, solver: NeighborDepth | None = None) -> BranchingTree:
    """Tree recording the pivot recursion; component splits peel off the first component."""
    solver = solver or NeighborDepth(g)

    def build(x: int) -> BranchingTree:
        if not x:
            return BranchingTree(0, "leaf")
        comps = connected_components(g, x)
        if len(comps) > 1:
            return BranchingTree(x, "decomposition", None, (build(comps[0]), build(x & ~comps[0])))
        v = solver.pivot(x)
        return BranchingTree(x, "branching", v, (build(x & ~g.closed(v)), build(x & ~(1 << v))))

    return build(g.all)


def verify_branching_tree(g: Graph, t: BranchingTree) -> Verdict:
    if t.label != g.all:
        return Verdict(False, "root is not labeled with the whole vertex set")
    stack = [t]
    while stack:
        node = stack.pop()
        x = node.label
        if x & ~g.all:
            return Verdict(False, f"label {to_list(x)} has vertices outside the graph")
        if node.kind == "leaf" or not node.children:
            if node.children:
                return Verdict(False, "leaf with children")
            if x:
                return Verdict(False, f"leaf labeled with nonempty set {to_list(x)}")
            continue
        if len(node.children) != 2:
            return Verdict(False, f"node {to_list(x)} does not have two children")
        left, right = node.children
        if node.kind == "branching":
            v = node.vertex
            if v is None or not 0 <= v < g.n or not x >> v & 1:
                return Verdict(False, f"branching vertex of {to_list(x)} is not in its label")
            if left.label != x & ~g.closed(v) or right.label != x & ~(1 << v):
                return Verdict(False, f"children of branching node {to_list(x)} on {v} are mislabeled")
        elif node.kind == "decomposition":
            l, r = left.label, right.label
            if not l or not r or l & r or l | r != x:
                return Verdict(False, f"decomposition of {to_list(x)} is not a nonempty partition")
            if g.union_adj(l) & r:
                return Verdict(False, f"decomposition of {to_list(x)} has edges between its parts")
        else:
            return Verdict(False, f"unknown node kind {node.kind!r}")
        stack.extend(node.children)
    return Verdict(True)


@dataclass
class BetaReport:
    nd: int
    tree_size: int
    beta: int | None
    lower_ok: bool
    upper_ok: bool
    exponent: float | None  # log(tree size) / (nd * log n), for reporting only

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok

    def to_json(self) -> dict:
        return {"nd": self.nd, "tree_size": self.tree_size, "beta": self.beta,
                "lower_ok": self.lower_ok, "upper_ok": self.upper_ok, "exponent": self.exponent}


def beta_bounds_check(g: Graph, exact_limit: int = 8) -> BetaReport:
    """2^nd against the smallest branching tree and the tree built from pivots."""
    from .oracles import brute_beta

    solver = NeighborDepth(g)
    k = solver.depth()
    tree = build_branching_tree(g, solver)
    size = tree.size
    beta = brute_beta(g) if g.n <= exact_limit else None
    lower = 2 ** k <= (beta if beta is not None else size)
    upper = beta is None or beta <= size
    exponent = math.log(size) / (k * math.log(g.n)) if k and g.n > 1 else None
    return BetaReport(k, size, beta, lower, upper, exponent)


def depth_bound(n: int, k: int, t: int) -> int:
    """ceil(1 + 4k (log_{3/2}(n) log2(n^2+1) + log2(t+1)))."""
    if n < 2:
        raise ValueError("the bound needs n >= 2")
    if k < 0 or t < 0:
        raise ValueError("k and t must be non-negative")
    if k == 0:
        return 1
    return math.ceil(1 + 4 * k * (math.log(n, 1.5) * math.log2(n * n + 1) + math.log2(t + 1)))


def check_simwidth_nd_bound(g: Graph, bd: BranchDecomposition) -> tuple[bool, int, int, int]:
    """(holds, nd, bound, sim-width of bd) for the depth bound with t = n^2."""
    k = exact_bd_width(g, bd, CutKind.SIM)
    depth = neighbor_depth(g)
    bound = depth_bound(g.n, k, g.n * g.n)
    return depth <= bound, depth, bound, k
