"""Command-line interface.

Graphs are read from DIMACS-like files (``p edge n m`` then ``e u v`` lines,
vertices 1-indexed). Every instance command takes a G file and an H file.
Exit codes: 0 success, 1 infeasible or stuck, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from .bounds import all_bounds
from .coloring import Coloring, format_coloring, is_proper, mono_count
from .errors import InfeasibleK, InputError, ParseError, RobustColoringError, Stuck
from .exact import solve_exact, solve_k2
from .generators import KINDS, generate
from .graph import Graph, Instance, format_dimacs, parse_dimacs
from .greedy import best_ordering_search, robust_greedy
from .orientation import (
    VertexOrdering,
    alpha_of,
    ell_tree_ordering,
    max_in_degree,
    min_in_degree_ordering,
    series_parallel_ordering,
    tree_ordering,
)
from .paths import PathInstance, three_color_with_trace


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def read_graph(path: str) -> Graph:
    return parse_dimacs(_read_text(path))


def read_pair(g_path: str, h_path: str) -> tuple[Graph, Graph]:
    """Read G and H; named vertices in H are resolved through G's names."""
    g, g_labels = parse_dimacs(_read_text(g_path), return_labels=True)
    h, h_labels = parse_dimacs(_read_text(h_path), return_labels=True)
    if h_labels != g_labels[: len(h_labels)] or h.n != g.n:
        index = {name: i for i, name in enumerate(g_labels)}
        try:
            edges = [(index[h_labels[u]], index[h_labels[v]]) for u, v in h.edges()]
        except KeyError as exc:
            raise InputError(f"H uses vertex {exc.args[0]} that G does not have") from None
        if h.n != g.n:
            raise InputError(f"G has {g.n} vertices but H has {h.n}")
        h = Graph(g.n, edges)
    return g, h


def read_ordering(path: str, n: int) -> VertexOrdering:
    tokens = []
    for line in _read_text(path).splitlines():
        line = line.strip()
        if line and line[0] != "c":
            tokens += line.split()
    try:
        order = [int(t) - 1 for t in tokens]
    except ValueError:
        raise ParseError("ordering file must list 1-indexed vertex numbers") from None
    if sorted(order) != list(range(n)):
        raise InputError(f"ordering is not a permutation of 1..{n}")
    return VertexOrdering.of(order)


def _instance(args) -> Instance:
    g, h = read_pair(args.g, args.h)
    return Instance(g, h, args.k)


def _colors_1based(c: Coloring) -> dict[str, int]:
    return {str(v + 1): col for v, col in enumerate(c.assignment)}


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=_json_default))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_coloring(args, c: Coloring) -> None:
    if getattr(args, "coloring_out", None):
        Path(args.coloring_out).write_text(format_coloring(c), encoding="utf-8")


# -- subcommands ---------------------------------------------------------------


def cmd_solve(args) -> int:
    inst = _instance(args)
    start = time.perf_counter()
    if args.k2:
        res = solve_k2(inst)
    else:
        res = solve_exact(inst, deterministic=args.deterministic)
    elapsed = time.perf_counter() - start
    _write_coloring(args, res.witness)
    payload = {
        "optimum": res.optimum,
        "k": inst.k,
        "coloring": _colors_1based(res.witness),
        "nodes": res.explored,
        "seconds": round(elapsed, 6),
    }
    text = f"optimum {res.optimum}\nnodes {res.explored}\n" + format_coloring(res.witness)
    _emit(args, payload, text)
    return 0


def cmd_greedy(args) -> int:
    inst = _instance(args)
    if args.search:
        order, c = best_ordering_search(inst)
    else:
        if args.order in (None, "identity"):
            order = VertexOrdering.identity(inst.n)
        else:
            order = read_ordering(args.order, inst.n)
        c = robust_greedy(inst, order)
    _write_coloring(args, c)
    mono = mono_count(inst.h, c)
    payload = {"mono": mono, "ordering": [v + 1 for v in order], "coloring": _colors_1based(c)}
    text = f"mono {mono}\nordering {' '.join(str(v + 1) for v in order)}\n" + format_coloring(c)
    _emit(args, payload, text)
    return 0


def cmd_bounds(args) -> int:
    inst = _instance(args)
    reports = all_bounds(inst)
    payload = {
        "bounds": [
            {"name": r.name, "kind": r.kind, "value": r.value, "params": r.params, "note": r.note}
            for r in reports
        ]
    }
    lines = []
    for r in reports:
        params = ", ".join(f"{k}={v}" for k, v in r.params.items())
        value = str(r.value) if r.applicable else r.note or "not applicable"
        lines.append(f"{r.kind:5}  {r.name}: {value}" + (f"  [{params}]" if params else ""))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_path3(args) -> int:
    g, h = read_pair(args.g, args.h)
    inst = PathInstance.from_graphs(g, h)
    c, trace = three_color_with_trace(inst)
    _write_coloring(args, c)
    mono, bound = mono_count(h, c), inst.bound()
    events = [{"kind": ev.kind, "position": ev.position + 1, **ev.detail} for ev in trace]
    payload = {
        "mono": mono,
        "bound": bound,
        "bridges": inst.bridge_count(),
        "coloring": _colors_1based(c),
        "trace": events,
    }
    text = f"mono {mono}\nbound {bound}\nbridges {inst.bridge_count()}\n" + format_coloring(c)
    if args.trace:
        text += "".join(f"c {ev.kind} at position {ev.position + 1} {ev.detail}\n" for ev in trace)
    _emit(args, payload, text)
    return 0


def cmd_orient(args) -> int:
    g = read_graph(args.g)
    if args.family == "tree":
        order = tree_ordering(g, root=args.root - 1)
    elif args.family == "sp":
        order = series_parallel_ordering(g)
    elif args.family == "ktree":
        order = ell_tree_ordering(g, args.ell)
    else:
        order = min_in_degree_ordering(g)
    d, alpha = max_in_degree(g, order), alpha_of(g, order)
    payload = {"family": args.family, "ordering": [v + 1 for v in order], "max_in_degree": d, "alpha": alpha}
    text = f"ordering {' '.join(str(v + 1) for v in order)}\nmax in-degree {d}\nalpha {alpha}"
    _emit(args, payload, text)
    return 0


def cmd_gen(args) -> int:
    gen = generate(args.kind, args.n, args.seed, m=args.m, ell=args.ell, density=args.density)
    note = f"{gen.kind} n={gen.g.n} seed={args.seed}" + (f" ({gen.note})" if gen.note else "")
    g_text = format_dimacs(gen.g, "G: " + note)
    h_text = format_dimacs(gen.h, "H: " + note)
    if args.out:
        Path(f"{args.out}.g.col").write_text(g_text, encoding="utf-8")
        Path(f"{args.out}.h.col").write_text(h_text, encoding="utf-8")
        print(f"wrote {args.out}.g.col and {args.out}.h.col")
    else:
        sys.stdout.write(g_text + h_text)
    return 0


def cmd_verify(args) -> int:
    from .exact import solve_naive

    rng = random.Random(args.seed)
    failures = 0
    checked = 0
    for _ in range(args.count):
        n = rng.randint(2, args.n)
        seed = rng.randrange(1 << 30)
        if args.suite == "oracle":
            gen = generate("random", n, seed)
            k = rng.randint(2, 4)
            try:
                ok = solve_exact(Instance(gen.g, gen.h, k)).optimum == solve_naive(Instance(gen.g, gen.h, k))
            except InfeasibleK:
                continue
        elif args.suite == "k2":
            gen = generate("tree", n, seed)
            inst = Instance(gen.g, gen.h, 2)
            ok = solve_k2(inst).optimum == solve_exact(inst).optimum
        elif args.suite == "greedy":
            gen = generate("random", min(n, 7), seed)
            inst = Instance(gen.g, gen.h, 3)
            try:
                opt = solve_exact(inst).optimum
            except InfeasibleK:
                continue
            ok = mono_count(gen.h, best_ordering_search(inst, target=opt)[1]) == opt
        else:
            gen = generate("path-union", max(n, 3), seed)
            inst = PathInstance.from_graphs(gen.g, gen.h)
            c, _ = three_color_with_trace(inst)
            ok = is_proper(gen.g, c) and mono_count(gen.h, c) <= inst.bound()
            if ok and gen.g.n <= 12:
                ok = solve_exact(inst.as_instance()).optimum <= mono_count(gen.h, c)
        checked += 1
        failures += not ok
    payload = {"suite": args.suite, "checked": checked, "failures": failures}
    _emit(args, payload, f"{args.suite}: {checked} instances checked, {failures} failures")
    return 0 if failures == 0 else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="robust-coloring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p, need_k=True):
        p.add_argument("g", help="G in DIMACS-like format")
        p.add_argument("h", help="H in DIMACS-like format (edges must avoid G)")
        if need_k:
            p.add_argument("-k", type=int, required=True, help="number of colors")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--coloring-out", metavar="FILE", help="also write the coloring to FILE")

    p = sub.add_parser("solve", help="exact optimum m(G,H,k)")
    instance_args(p)
    p.add_argument("--k2", action="store_true", help="use the component-flip solver (k=2, bipartite G)")
    p.add_argument("--deterministic", action="store_true", help="report the lexicographically smallest optimal coloring")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("greedy", help="robust-greedy coloring along an ordering")
    instance_args(p)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--order", metavar="FILE|identity", help="ordering file (1-indexed vertices) or 'identity'")
    src.add_argument("--search", action="store_true", help="search all orderings for the best run")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("bounds", help="every applicable bound with its parameters")
    instance_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("path3", help="3-color a path G against a union of paths H")
    instance_args(p, need_k=False)
    p.add_argument("--trace", action="store_true", help="list the decomposition steps")
    p.set_defaults(func=cmd_path3)

    p = sub.add_parser("orient", help="vertex ordering with small maximum in-degree")
    p.add_argument("g")
    p.add_argument("--family", choices=("exact", "tree", "sp", "ktree"), default="exact")
    p.add_argument("--ell", type=int, default=2, help="l for --family ktree")
    p.add_argument("--root", type=int, default=1, help="root for --family tree (1-indexed)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int, help="number of vertices (first side for complete-bipartite)")
    p.add_argument("m", type=int, nargs="?", help="second side for complete-bipartite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--density", type=float, default=0.5, help="fraction of complement edges kept in H")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.g.col and PREFIX.h.col instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="random cross-checks against the exact solver")
    p.add_argument("suite", choices=("oracle", "k2", "greedy", "path"))
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=8, help="maximum number of vertices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleK, Stuck) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RobustColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
