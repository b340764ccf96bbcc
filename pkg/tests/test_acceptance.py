"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every instance is drawn from a fixed seed so failures are reproducible.
"""

import random
import time

import pytest

from omimwidth.cuts import (
    Cut, CutKind, controlled_crossing_edges, cut_width, find_controlling_vertex, umim_kernel,
)
from omimwidth.decomp import (
    TreeDecomposition, certify_omim_le_tin, certify_sim_le_tmm, exact_bd_width,
    min_fill_decomposition, random_branch_decomposition, root_decomposition, td_mu, td_to_bd,
)
from omimwidth.families import (
    gen_chordal, gen_cograph_tower, gen_levels, gen_path, gen_random, gen_swp6,
    levels_decomposition, verify_structure,
)
from omimwidth.graph import bits, is_forest, is_independent
from omimwidth.ndepth import (
    NeighborDepth, build_branching_tree, depth_bound, neighbor_depth, solve_is_nd,
)
from omimwidth.oracles import brute_beta, brute_fvs, brute_is, brute_nd, brute_representative_check
from omimwidth.repdp import (
    Problem, SolutionCollection, dp_solve, fvs_bound, reduce_fvs, reduce_is, solve_fvs,
)

PROBS = (0.2, 0.5, 0.8)


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, failures: list, detail: str = "") -> None:
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += f"; first failure: {failures[0]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line
    return emit


def random_instance(seed: int, n_lo: int, n_hi: int, max_weight: int | None = 100):
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    g = gen_random(n, PROBS[seed % 3], rng, max_weight=max_weight)
    return g, rng


def decomposition(g, rng, seed):
    # alternate between a heuristic decomposition and an arbitrary one
    if seed % 2:
        return random_branch_decomposition(g.n, rng)
    return td_to_bd(g, min_fill_decomposition(g))


def independent_subset(g, pool, rng):
    x = 0
    order = list(bits(pool))
    rng.shuffle(order)
    for v in order:
        if not g.adj[v] & x and rng.random() < 0.7:
            x |= 1 << v
    return x


def test_01_independent_set_oracle_equivalence(report):
    failures, start = [], time.perf_counter()
    for seed in range(500):
        g, rng = random_instance(10_000 + seed, 2, 14)
        rbd = root_decomposition(decomposition(g, rng, seed))
        dp = dp_solve(g, rbd, Problem.IS)
        nd_weight, nd_set = solve_is_nd(g)
        brute = brute_is(g)[0]
        if not (dp.weight == nd_weight == brute) or not is_independent(g, dp.solution) \
                or not is_independent(g, nd_set):
            failures.append((seed, dp.weight, nd_weight, brute))
    elapsed = time.perf_counter() - start
    if elapsed >= 600:
        failures.append(f"took {elapsed:.0f}s")
    report(1, "IS: repdp = neighbor-depth = brute force on 500 graphs", failures, f"{elapsed:.1f}s")


def test_02_feedback_vertex_set_oracle_equivalence(report):
    failures, start = [], time.perf_counter()
    for seed in range(500):
        g, rng = random_instance(20_000 + seed, 2, 12)
        res = solve_fvs(g, root_decomposition(decomposition(g, rng, seed)))
        brute = brute_fvs(g)[0]
        if res.weight != brute or not is_forest(g, g.all & ~res.solution):
            failures.append((seed, res.weight, brute))
    elapsed = time.perf_counter() - start
    report(2, "FVS: repdp complement = brute force on 500 graphs", failures, f"{elapsed:.1f}s")


def test_03_representativity(report):
    failures = []
    for seed in range(200):
        g, rng = random_instance(30_000 + seed, 2, 10)
        a = rng.randrange(1, g.all)
        cut = Cut(g, a)
        k = cut_width(cut, CutKind.OMIM)
        n = g.n
        subsets = [x for x in range(1 << n) if not x & ~a]
        for family, reduce, test, bound in (
                ("IS", reduce_is, is_independent, n ** k),
                ("F", reduce_fvs, is_forest, fvs_bound(n, k))):
            coll = SolutionCollection.of(g, a, [x for x in subsets if test(g, x)])
            out = reduce(g, cut, coll, k)
            if len(out) > bound or not brute_representative_check(g, a, coll, out, family):
                failures.append((seed, family, len(coll), len(out), bound))
    report(3, "representative subfamilies on 200 cuts, within size bounds", failures)


def test_04_width_chain(report):
    failures, cuts, seed = [], 0, 0
    while cuts < 1000:
        g, rng = random_instance(40_000 + seed, 2, 12, None)
        seed += 1
        for _, a in random_branch_decomposition(g.n, rng).cuts():
            cut = Cut(g, a)
            sim, omim, mim = (cut_width(cut, k) for k in (CutKind.SIM, CutKind.OMIM, CutKind.MIM))
            ua, ub = cut_width(cut, CutKind.UMIM_A), cut_width(cut, CutKind.UMIM_ABAR)
            if not (sim <= omim <= mim and omim == min(ua, ub)):
                failures.append((seed, a, sim, omim, mim, ua, ub))
            cuts += 1
    report(4, "sim <= omim = min(umimA, umimAbar) <= mim", failures, f"{cuts} cuts")


def test_05_bag_width_certificates(report):
    failures, start = [], time.perf_counter()
    for seed in range(100):
        rng = random.Random(50_000 + seed)
        g, td = gen_chordal(rng.randint(2, 14), seed)
        cert = certify_omim_le_tin(g, td)
        if not cert or cert.width > 1:
            failures.append(("chordal", seed, cert))
    for seed in range(100):
        g, rng = random_instance(51_000 + seed, 2, 10, None)
        td = min_fill_decomposition(g) if seed % 2 else td_from_elimination(g, rng)
        cert = certify_sim_le_tmm(g, td)
        if not cert:
            failures.append(("random", seed, cert))
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        failures.append(f"took {elapsed:.0f}s")
    report(5, "omim-width <= tree-independence (chordal, width <= 1) and sim-width <= tree-mu",
           failures, f"{elapsed:.1f}s")


def td_from_elimination(g, rng):
    """Valid tree decomposition from a random elimination order."""
    order = list(range(g.n))
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    adj = list(g.adj)
    bags, parent_of = {}, {}
    for v in order:
        later = 0
        for u in bits(adj[v]):
            if pos[u] > pos[v]:
                later |= 1 << u
        bags[v] = later | 1 << v
        for u in bits(later):
            adj[u] |= later & ~(1 << u)
        if later:
            parent_of[v] = min(bits(later), key=pos.__getitem__)
    edges = [(v, p) for v, p in parent_of.items()]
    roots = [v for v in order if v not in parent_of]
    edges += [(roots[i], roots[i + 1]) for i in range(len(roots) - 1)]
    return TreeDecomposition(bags, edges)


def test_06_neighbor_depth_agreement(report):
    failures = []
    for seed in range(300):
        g, _ = random_instance(60_000 + seed, 1, 11, None)
        if neighbor_depth(g) != brute_nd(g):
            failures.append(("value", seed))
    for seed in range(200):
        g, rng = random_instance(61_000 + seed, 1, 10, None)
        x = rng.randrange(1 << g.n)
        solver = NeighborDepth(g)
        if solver.depth(x) > solver.depth():
            failures.append(("monotone", seed, x))
    report(6, "neighbor-depth = exhaustive value on 300 graphs; monotone on 200 induced subgraphs",
           failures)


def test_07_branching_tree_bounds(report):
    failures = []
    for seed in range(100):
        g, _ = random_instance(70_000 + seed, 1, 8, None)
        nd = neighbor_depth(g)
        beta = brute_beta(g)
        size = build_branching_tree(g).size
        if not 2 ** nd <= beta <= size:
            failures.append((seed, nd, beta, size))
    report(7, "2^nd <= smallest branching tree <= built tree on 100 graphs", failures)


def test_08_depth_bound_from_simwidth(report):
    failures = []
    for seed in range(100):
        rng = random.Random(80_000 + seed)
        g, td = gen_chordal(rng.randint(2, 14), 80_000 + seed)
        k = exact_bd_width(g, td_to_bd(g, td), CutKind.SIM)
        depth, bound = neighbor_depth(g), depth_bound(g.n, 1, g.n * g.n)
        if k > 1 or depth > bound:
            failures.append((seed, k, depth, bound))
    report(8, "chordal graphs: sim-width <= 1 and nd <= depth bound with k=1, t=n^2", failures)


def test_09_family_structure(report):
    failures = []
    for n in (1, 2, 3):
        g, _ = gen_swp6(n)
        for check, k in (("no-induced-path-k", 6), ("no-induced-cycle-ge-k", 5),
                         ("no-induced-cocycle-ge-k", 5)):
            if not verify_structure(g, check, k):
                failures.append(("swp6", n, check))
    g = gen_levels(3, 2)
    mu = td_mu(g, levels_decomposition(3, 2))
    if mu > 7:
        failures.append(("levels", mu))
    for i in (1, 2, 3):
        g = gen_cograph_tower(i)
        if not verify_structure(g, "is-cograph") or neighbor_depth(g) < i:
            failures.append(("cograph", i))
    for k in (1, 2):
        if neighbor_depth(gen_path(3 ** k)) < k:
            failures.append(("path", k))
    report(9, "family structure: swp6, levels mu <= 7, cograph towers, long paths", failures)


def test_10_kernel(report):
    failures = []
    for seed in range(200):
        g, rng = random_instance(100_000 + seed, 2, 12, None)
        a = rng.randrange(1, g.all)
        cut = Cut(g, a)
        x = independent_subset(g, a, rng)
        kernel = umim_kernel(cut, x)
        umim = cut_width(cut, CutKind.UMIM_A)
        if kernel & ~x or g.union_adj(kernel) & ~a != g.union_adj(x) & ~a or kernel.bit_count() > umim:
            failures.append((seed, x, kernel, umim))
    report(10, "kernel keeps the outside neighbourhood within umim(A) vertices", failures)


def test_11_controlling_vertex(report):
    failures, tested, seed = [], 0, 0
    while tested < 200:
        g, rng = random_instance(110_000 + seed, 2, 12, None)
        seed += 1
        cut = Cut(g, rng.randrange(1, g.all))
        edges = cut.crossing_edges()
        if not edges:
            continue
        tested += 1
        sw = cut_width(cut, CutKind.SIM)
        v = find_controlling_vertex(cut, sw)
        count = controlled_crossing_edges(cut, v)
        if 2 * sw * count < len(edges):
            failures.append((seed, sw, count, len(edges)))
    report(11, "a vertex controls at least |E(A, Abar)| / (2 sim) crossing edges", failures,
           f"{tested} cuts")
