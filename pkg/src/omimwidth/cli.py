"""Command-line interface.  Every command prints one JSON object with ``"schema": 1``.

Exit status is 0 on success, 2 for bad input (with a message on stderr) and
1 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import decomp, families, ndepth, oracles, repdp
from .cuts import Cut, CutKind, cut_value, cut_width
from .graph import Graph, format_graph, parse_graph, to_list

SCHEMA = 1


class InputError(ValueError):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args) -> Graph:
    return parse_graph(_read(getattr(args, "graph", None)))


def _emit(payload: dict, args=None, started: float | None = None) -> None:
    out = {"schema": SCHEMA}
    out.update(payload)
    if args is not None and getattr(args, "timing", False) and started is not None:
        out["runtime_ms"] = round((time.perf_counter() - started) * 1000, 3)
    print(json.dumps(out, sort_keys=True))


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _parse_cut(g: Graph, spec: str) -> Cut:
    try:
        vs = [int(t) for t in spec.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"cut must be comma-separated vertex ids, got {spec!r}") from None
    mask = 0
    for v in vs:
        if not 0 <= v < g.n:
            raise InputError(f"cut vertex {v} out of range")
        mask |= 1 << v
    return Cut(g, mask)


def _decomposition_for(g: Graph, args) -> decomp.BranchDecomposition:
    """--bd if given, else --td converted, else exhaustive for n <= 10, else min-fill."""
    if args.bd:
        bd = decomp.load_bd(_read(args.bd))
        if bd.n != g.n:
            raise InputError(f"decomposition has {bd.n} leaves, graph has {g.n} vertices")
        return bd
    if args.td:
        return decomp.td_to_bd(g, decomp.parse_td(_read(args.td)))
    if g.n <= decomp.BRUTE_BRANCHWIDTH_LIMIT:
        _, bd = decomp.brute_force_branchwidth(g, CutKind.OMIM)
        return bd
    return decomp.td_to_bd(g, decomp.min_fill_decomposition(g))


# ---------------------------------------------------------------- commands


def _kind(name: str) -> CutKind:
    return CutKind.UMIM_A if name == "umim" else CutKind(name)


def cmd_width_cut(args) -> None:
    g = _graph(args)
    if (args.cut is None) == (args.side is None):
        raise InputError("give exactly one of --cut and --side")
    spec = args.cut if args.cut is not None else ",".join(_read(args.side).replace(",", " ").split())
    cut = _parse_cut(g, spec)
    kind = _kind(args.kind)
    cap = args.cap if args.cap is not None else cut_width(cut, kind)
    report = cut_value(cut, kind, cap)
    _emit({"kind": kind.value, **report.to_json()})


def cmd_width_bd(args) -> None:
    g = _graph(args)
    bd = decomp.load_bd(_read(args.bd))
    if args.cap is None:
        width = decomp.exact_bd_width(g, bd, _kind(args.kind))
    else:
        width = decomp.bd_width(g, bd, _kind(args.kind), args.cap)
    _emit({"kind": _kind(args.kind).value, "width": width, "exceeds_cap": width is None})


def cmd_width_oracle(args) -> None:
    g = _graph(args)
    width, bd = decomp.brute_force_branchwidth(g, _kind(args.kind), args.cap, args.limit)
    _emit({"kind": _kind(args.kind).value, "width": width, "bd": bd.to_json() if bd else None})


def cmd_solve(args) -> None:
    started = time.perf_counter()
    g = _graph(args)
    problem = args.problem
    if args.engine == "nd":
        if problem != "is":
            raise InputError("the neighbor-depth engine solves independent set only")
        solver = ndepth.NeighborDepth(g)
        weight, sol = ndepth.solve_is_nd(g, solver)
        _emit({"weight": weight, "solution": to_list(sol), "nd": solver.depth()}, args, started)
        return
    if args.engine == "brute" or g.n < 2:
        weight, sol = oracles.brute_is(g) if problem == "is" else oracles.brute_fvs(g)
        _emit({"weight": weight, "solution": to_list(sol)}, args, started)
        return
    rbd = decomp.root_decomposition(_decomposition_for(g, args))
    if problem == "is":
        res = repdp.dp_solve(g, rbd, repdp.Problem.IS)
    else:
        res = repdp.solve_fvs(g, rbd)
    _emit({"weight": res.weight, "solution": to_list(res.solution),
           "width_used": res.width_used, "nodes": res.nodes}, args, started)


def cmd_nd_compute(args) -> None:
    g = _graph(args)
    solver = ndepth.NeighborDepth(g)
    k = solver.depth()
    if args.emit_trace:
        _write(args.emit_trace, json.dumps({"schema": SCHEMA, "nd": k, "records": solver.trace.to_json()}) + "\n")
    _emit({"nd": k})


def cmd_tree_build(args) -> None:
    g = _graph(args)
    tree = ndepth.build_branching_tree(g)
    payload = {"size": tree.size, "tree": tree.to_json()}
    if args.out:
        _write(args.out, json.dumps({"schema": SCHEMA, **payload}) + "\n")
        _emit({"size": tree.size, "out": args.out})
    else:
        _emit(payload)


def cmd_tree_verify(args) -> None:
    g = _graph(args)
    try:
        data = json.loads(_read(args.tree))
    except json.JSONDecodeError as exc:
        raise InputError(f"tree file is not JSON: {exc}") from None
    tree = ndepth.BranchingTree.from_json(data.get("tree", data) if isinstance(data, dict) else data)
    verdict = ndepth.verify_branching_tree(g, tree)
    _emit({"valid": verdict.ok, "reason": verdict.reason, "size": tree.size})


def cmd_gen(args) -> None:
    fam = args.family
    extra = {}
    if fam == "path":
        g = families.gen_path(args.n)
    elif fam == "cograph":
        g = families.gen_cograph_tower(args.i)
    elif fam == "swp6":
        g, _ = families.gen_swp6(args.n)
    elif fam == "knn-pendant":
        g = families.gen_knn_pendant(args.n)
    elif fam == "levels":
        g = families.gen_levels(args.levels, args.q)
        extra["td"] = families.levels_decomposition(args.levels, args.q)
    else:
        if args.seed is None:
            raise InputError("gen chordal requires --seed")
        g, td = families.gen_chordal(args.n, args.seed)
        extra["td"] = td
    if args.td_out:
        if "td" not in extra:
            raise InputError(f"family {fam} has no accompanying tree decomposition")
        _write(args.td_out, decomp.format_td(extra["td"], g.n))
    text = format_graph(g)
    if args.out:
        _write(args.out, text)
        _emit({"family": fam, "n": g.n, "m": g.m, "out": args.out})
    else:
        sys.stdout.write(text)


def cmd_certify(args) -> None:
    what = args.what
    if what == "eq1-bound":
        if args.graph and args.bd:
            g = _graph(args)
            bd = decomp.load_bd(_read(args.bd))
            holds, depth, bound, k = ndepth.check_simwidth_nd_bound(g, bd)
            _emit({"holds": holds, "nd": depth, "bound": bound, "sim_width": k})
        else:
            if args.n is None or args.k is None:
                raise InputError("eq1-bound needs --n and --k (and optionally --t), or --graph and --bd")
            t = args.t if args.t is not None else args.n * args.n
            _emit({"bound": ndepth.depth_bound(args.n, args.k, t), "n": args.n, "k": args.k, "t": t})
        return
    g = _graph(args)
    if what == "beta-bounds":
        _emit(ndepth.beta_bounds_check(g).to_json())
        return
    if args.td:
        td = decomp.parse_td(_read(args.td))
    else:
        td = decomp.min_fill_decomposition(g)
    if g.n < 2:
        raise InputError("certification needs at least two vertices")
    cert = (decomp.certify_omim_le_tin if what == "omim-le-tin" else decomp.certify_sim_le_tmm)(g, td)
    _emit({"holds": cert.holds, "width": cert.width, "bound": cert.bound})


def cmd_oracle(args) -> None:
    g = _graph(args)
    which = args.which
    if which == "is":
        w, s = oracles.brute_is(g)
        _emit({"weight": w, "solution": to_list(s)})
    elif which == "fvs":
        w, s = oracles.brute_fvs(g)
        _emit({"weight": w, "solution": to_list(s)})
    elif which == "nd":
        _emit({"nd": oracles.brute_nd(g)})
    else:
        _emit({"beta": oracles.brute_beta(g)})


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omimwidth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in CutKind] + ["umim"]

    width = sub.add_parser("width", help="cut functions and decomposition widths")
    wsub = width.add_subparsers(dest="mode", required=True)
    w = wsub.add_parser("cut", help="value of one cut")
    w.add_argument("--graph")
    w.add_argument("--cut", help="comma-separated vertices of side A")
    w.add_argument("--side", help="file listing the vertices of side A")
    w.add_argument("--kind", choices=kinds, default="omim")
    w.add_argument("--cap", type=int)
    w.set_defaults(func=cmd_width_cut)
    w = wsub.add_parser("bd", help="width of a branch decomposition")
    w.add_argument("--graph")
    w.add_argument("--bd", required=True)
    w.add_argument("--kind", choices=kinds, default="omim")
    w.add_argument("--cap", type=int)
    w.set_defaults(func=cmd_width_bd)
    w = wsub.add_parser("oracle", help="exact width by exhaustive search")
    w.add_argument("--graph")
    w.add_argument("--kind", choices=kinds, default="omim")
    w.add_argument("--cap", type=int)
    w.add_argument("--limit", type=int, default=decomp.BRUTE_BRANCHWIDTH_LIMIT)
    w.set_defaults(func=cmd_width_oracle)

    solve = sub.add_parser("solve", help="max-weight independent set or min-weight feedback vertex set")
    solve.add_argument("problem", choices=["is", "fvs"])
    solve.add_argument("--graph")
    solve.add_argument("--bd")
    solve.add_argument("--td")
    solve.add_argument("--engine", choices=["repdp", "nd", "brute"], default="repdp")
    solve.add_argument("--timing", action="store_true", help="include runtime_ms (non-deterministic)")
    solve.set_defaults(func=cmd_solve)

    nd = sub.add_parser("nd", help="neighbor-depth")
    nsub = nd.add_subparsers(dest="mode", required=True)
    c = nsub.add_parser("compute")
    c.add_argument("--graph", help="graph file, or - / omitted for stdin")
    c.add_argument("--emit-trace")
    c.set_defaults(func=cmd_nd_compute)

    tree = sub.add_parser("tree", help="independent set branching trees")
    tsub = tree.add_subparsers(dest="mode", required=True)
    t = tsub.add_parser("build")
    t.add_argument("--graph")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tree_build)
    t = tsub.add_parser("verify")
    t.add_argument("--graph")
    t.add_argument("--tree", required=True)
    t.set_defaults(func=cmd_tree_verify)

    gen = sub.add_parser("gen", help="graph families")
    gen.add_argument("family", choices=["path", "cograph", "swp6", "knn-pendant", "levels", "chordal"])
    gen.add_argument("--n", type=int, default=1)
    gen.add_argument("--i", type=int, default=1)
    gen.add_argument("--levels", type=int, default=1)
    gen.add_argument("--q", type=int, default=1)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out")
    gen.add_argument("--td-out")
    gen.set_defaults(func=cmd_gen)

    cert = sub.add_parser("certify", help="check width inequalities on concrete inputs")
    cert.add_argument("what", choices=["omim-le-tin", "sim-le-tmm", "eq1-bound", "beta-bounds"])
    cert.add_argument("--graph")
    cert.add_argument("--td")
    cert.add_argument("--bd")
    cert.add_argument("--n", type=int)
    cert.add_argument("--k", type=int)
    cert.add_argument("--t", type=int)
    cert.set_defaults(func=cmd_certify)

    orc = sub.add_parser("oracle", help="exhaustive reference answers")
    orc.add_argument("which", choices=["is", "fvs", "nd", "beta"])
    orc.add_argument("--graph")
    orc.set_defaults(func=cmd_oracle)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, RecursionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
