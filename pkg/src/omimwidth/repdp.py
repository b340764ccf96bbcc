"""Representative-set dynamic programming for max-weight independent set and induced forest.

A *collection* is a family of feasible partial solutions living inside one
side A of a cut.  A subfamily B represents the collection when, for every
Y outside A, the heaviest member X with X | Y feasible has the same weight
in both.  The DP keeps one small representative family per node of a rooted
branch decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .cuts import Cut, CutKind, cut_value, cut_width, umim_kernel
from .decomp import RootedBranchDecomposition
from .graph import Graph, bits, connected_components, is_forest, is_independent, lex_key


class Problem(str, Enum):
    IS = "max-weight-IS"
    FOREST = "max-weight-induced-forest"


def is_feasible(g: Graph, x: int, problem: Problem) -> bool:
    return is_independent(g, x) if problem is Problem.IS else is_forest(g, x)


@dataclass
class SolutionCollection:
    side: int
    members: dict[int, int] = field(default_factory=dict)  # vertex set -> weight

    @classmethod
    def of(cls, g: Graph, side: int, sets: Iterable[int]) -> SolutionCollection:
        out = cls(side)
        for x in sets:
            if x & ~side:
                raise ValueError("collection member leaves its side")
            out.members[x] = g.weight(x)
        return out

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def best(self) -> tuple[int, int]:
        """(weight, set) of the heaviest member, lexicographically smallest among ties."""
        return min(self.members.items(), key=lambda kv: (-kv[1], lex_key(kv[0])))[::-1]


def _preferred(g: Graph, x: int, incumbent: int | None) -> bool:
    if incumbent is None:
        return True
    wx, wi = g.weight(x), g.weight(incumbent)
    return wx > wi or (wx == wi and lex_key(x) < lex_key(incumbent))


def _umim_side(cut: Cut, k: int) -> bool:
    """True when umim(A) <= k, i.e. the A side carries the kernel."""
    return not cut_value(cut, CutKind.UMIM_A, k).exceeds


def _small_subsets(pool: int, size: int) -> Iterator[int]:
    vs = list(bits(pool))
    for r in range(min(size, len(vs)) + 1):
        for combo in itertools.combinations(vs, r):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def _check_bound(size: int, bound: int, what: str) -> None:
    if size > bound:
        raise AssertionError(f"{what}: {size} representatives exceed the bound {bound}")


# ---------------------------------------------------------------- independent set


def reduce_is(g: Graph, cut: Cut, coll: SolutionCollection, k: int) -> SolutionCollection:
    """Representative subfamily of independent sets of size at most n^k.

    When umim(A) <= k, members are grouped by N(X) minus A and the heaviest of
    each group is kept.  Otherwise, for every independent Y outside A with
    |Y| <= k, the heaviest member avoiding N(Y) is kept.
    """
    a = cut.a
    for x in coll:
        if not is_independent(g, x):
            raise ValueError(f"collection member {lex_key(x)} is not independent")
    keep: dict[object, int] = {}
    if _umim_side(cut, k):
        outside = cut.abar
        for x in coll:
            key = g.union_adj(x) & outside
            if _preferred(g, x, keep.get(key)):
                keep[key] = x
    else:
        for y in _small_subsets(cut.abar, k):
            if not is_independent(g, y):
                continue
            blocked = g.union_adj(y)
            for x in coll:
                if not x & blocked and _preferred(g, x, keep.get(y)):
                    keep[y] = x
    out = SolutionCollection(a, {x: coll.members[x] for x in keep.values()})
    _check_bound(len(out), g.n ** k, "independent set reduction")
    return out


# ---------------------------------------------------------------- induced forest


@dataclass(frozen=True)
class FvsTriple:
    """(X-core, Y-core, W) with ``w_side`` telling which side W lives on."""

    xbb: int
    ybb: int
    wbb: int
    w_side: str  # "A" or "Abar"


def important_vertices(g: Graph, cut: Cut, f: int) -> int:
    """Vertices of F inside A with two F-neighbours across, or a private single one."""
    if not is_forest(g, f):
        raise ValueError("important vertices are defined for induced forests only")
    fa, fb = f & cut.a, f & cut.abar
    out = 0
    for x in bits(fa):
        across = g.adj[x] & fb
        c = across.bit_count()
        if c >= 2:
            out |= 1 << x
        elif c == 1:
            y = across.bit_length() - 1
            if g.adj[y] & fa == 1 << x:
                out |= 1 << x
    return out


def enumerate_triples(g: Graph, cut: Cut, k: int) -> list[FvsTriple]:
    """Every triple within the size bound 2k, W on the side whose umim is at most k."""
    w_on_a = _umim_side(cut, k)
    w_pool = cut.a if w_on_a else cut.abar
    side = "A" if w_on_a else "Abar"
    xs = list(_small_subsets(cut.a, 2 * k))
    ys = list(_small_subsets(cut.abar, 2 * k))
    ws = list(_small_subsets(w_pool, 2 * k))
    return [FvsTriple(x, y, w, side) for x in xs for y in ys for w in ws]


def compatible(side: str, s: int, t: FvsTriple, g: Graph, cut: Cut) -> bool:
    """Compatibility of a set on one side of the cut with a triple."""
    if side == "A":
        own, core, other_core, outside = cut.a, t.xbb, t.ybb, cut.abar
    elif side == "Abar":
        own, core, other_core, outside = cut.abar, t.ybb, t.xbb, cut.a
    else:
        raise ValueError("side must be 'A' or 'Abar'")
    if s & ~own:
        raise ValueError("set does not lie on the named side")
    if core & ~s or not is_forest(g, s | other_core):
        return False
    rest = s & ~core
    if t.w_side == side:
        return g.union_adj(rest) & outside == g.union_adj(t.wbb) & outside
    return not g.union_adj(t.wbb) & rest


def _signature(g: Graph, x: int, xbb: int, ybb: int) -> tuple[int, ...]:
    terminals = xbb | ybb
    blocks = [c & terminals for c in connected_components(g, x | ybb)]
    return tuple(sorted(b for b in blocks if b))


def t_signature(g: Graph, t: FvsTriple, x: int, cut: Cut | None = None) -> tuple[int, ...]:
    """Partition of the triple's cores by connectivity in g[x | Y-core], as sorted masks."""
    if cut is not None and not compatible("A", x, t, g, cut):
        raise ValueError("set is not compatible with the triple")
    return _signature(g, x, t.xbb, t.ybb)


def fvs_bound(n: int, k: int) -> int:
    return n ** (6 * k) * (4 * k) ** (4 * k)


def _realizable_shadows(g: Graph, cut: Cut, k: int) -> list[int]:
    """Distinct N(W) & A over W outside A with |W| <= 2k."""
    return sorted({g.union_adj(w) & cut.a for w in _small_subsets(cut.abar, 2 * k)})


def _fvs_keys(g: Graph, cut: Cut, x: int, k: int, w_on_a: bool,
              shadows: list[int]) -> Iterator[tuple]:
    """Class keys of the triples ``x`` is registered under.

    Only triples that can arise as (A-important, Abar-important, kernel) of
    some forest x | Y are produced; W enters the key through the part of the
    condition it controls (its neighbourhood across the cut).
    """
    a, abar, adj = cut.a, cut.abar, g.adj
    across = g.union_adj(x) & abar
    x_pool = 0
    for v in bits(x):
        if adj[v] & abar:
            x_pool |= 1 << v
    for ybb in _small_subsets(across, 2 * k):
        if not is_forest(g, x | ybb):
            continue
        forced = 0
        for y in bits(ybb):
            nx = adj[y] & x
            if nx.bit_count() == 1:
                forced |= nx
        if forced.bit_count() > 2 * k:
            continue
        candidates = 0
        for v in bits(x_pool & ~forced):
            if (adj[v] & abar).bit_count() >= 2 or adj[v] & ybb:
                candidates |= 1 << v
        for extra in _small_subsets(candidates, 2 * k - forced.bit_count()):
            xbb = forced | extra
            rest = x & ~xbb
            sig = _signature(g, x, xbb, ybb)
            if w_on_a:
                shadow = g.union_adj(rest) & abar
                if umim_kernel(cut, rest, t=2).bit_count() > 2 * k:
                    raise AssertionError("kernel exceeds twice the cut width")
                yield (xbb, ybb, shadow, sig)
            else:
                for shadow in shadows:
                    if not shadow & rest:
                        yield (xbb, ybb, shadow, sig)


def reduce_fvs(g: Graph, cut: Cut, coll: SolutionCollection, k: int) -> SolutionCollection:
    """Representative subfamily of forest-inducing sets.

    One heaviest member is kept per (triple, connectivity signature) class.
    Classes are materialized only when some member falls into them.
    """
    for x in coll:
        if not is_forest(g, x):
            raise ValueError(f"collection member {lex_key(x)} does not induce a forest")
    w_on_a = _umim_side(cut, k)
    shadows = [] if w_on_a else _realizable_shadows(g, cut, k)
    keep: dict[tuple, int] = {}
    for x in coll:
        for key in _fvs_keys(g, cut, x, k, w_on_a, shadows):
            if _preferred(g, x, keep.get(key)):
                keep[key] = x
    out = SolutionCollection(cut.a, {x: coll.members[x] for x in set(keep.values())})
    _check_bound(len(out), fvs_bound(g.n, k), "induced forest reduction")
    return out


# ---------------------------------------------------------------- engine


@dataclass
class DPResult:
    weight: int
    solution: int
    width_used: int
    nodes: int


def reduce_for(problem: Problem):
    return reduce_is if problem is Problem.IS else reduce_fvs


def dp_solve(g: Graph, rbd: RootedBranchDecomposition, problem: Problem | str) -> DPResult:
    """Max-weight independent set or induced forest by bottom-up representative sets.

    Leaves start with {empty, {v}}.  An internal node joins its children's
    families pairwise, drops infeasible unions and reduces against its cut,
    with k the exact o-mim value of that cut.
    """
    problem = Problem(problem)
    if g.n < 2:
        raise ValueError("dynamic programming needs at least two vertices; solve directly")
    if rbd.base.n != g.n:
        raise ValueError("decomposition does not match the graph")
    reduce = reduce_for(problem)
    tables: dict[int, SolutionCollection] = {}
    width_used = 0
    for node in rbd.postorder():
        side = rbd.below[node]
        kids = rbd.children[node]
        if not kids:
            v = rbd.vertex_at[node]
            merged = SolutionCollection.of(g, side, [0, 1 << v])
        else:
            merged = SolutionCollection(side)
            left, right = (tables.pop(c) for c in kids)
            for x1 in left:
                for x2 in right:
                    x = x1 | x2
                    if x not in merged.members and is_feasible(g, x, problem):
                        merged.members[x] = g.weight(x)
        if node == rbd.root:
            tables[node] = merged
            break
        cut = Cut(g, side)
        k = cut_width(cut, CutKind.OMIM)
        width_used = max(width_used, k)
        tables[node] = reduce(g, cut, merged, k)
    weight, solution = tables[rbd.root].best()
    return DPResult(weight, solution, width_used, len(rbd.children))


def solve_fvs(g: Graph, rbd: RootedBranchDecomposition) -> DPResult:
    """Min-weight feedback vertex set as the complement of the heaviest induced forest."""
    forest = dp_solve(g, rbd, Problem.FOREST)
    return DPResult(g.weight(g.all) - forest.weight, g.all & ~forest.solution,
                    forest.width_used, forest.nodes)
