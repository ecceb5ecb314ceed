"""Command-line surface: verification, constructions, generators,
enumeration, and spectrum runs over graph6 files."""
from __future__ import annotations

import argparse
import sys

from . import graph6
from .bounds import moore_bound, parity_admissible, sauer_bound, excluded_by_excess
from .canon import certificate
from .constructions import (
    amalgamate,
    canonical_double_cover,
    dedup_first,
    find_perfect_matching,
    iter_subdivide_merge,
    iter_subdivide_three,
    iter_subdivide_two,
    moore_double_matching,
    apply_moore_double,
)
from .enumeration import EnumSpec, enumerate_regular
from .errors import CagekitError
from .families import CirculantSpec, GdgpSpec, circulant, gdgp, quartic_parity_graph
from .graph import ACYCLIC, Graph, check_kg, remove_edges
from .limits import DEFAULT_BUDGET, Budget
from .recipes import Recipe, write_recipes
from .rewire import (
    iter_delete_edges_add_vertices,
    iter_delete_vertices,
    iter_remove_biggs_tree,
)
from .spectrum import (
    DEFAULT_CONSTRUCTIONS,
    SearchConfig,
    load_seeds,
    parse_citations,
    render_report,
    spectrum_search,
)

CONSTRUCT_NAMES = (
    "amalgamate",
    "subdivide_two",
    "subdivide_three",
    "subdivide_merge",
    "moore_tree_double",
    "delete_edges_add_vertices",
    "delete_vertices",
    "remove_biggs_tree",
    "remove_perfect_matching",
    "canonical_double_cover",
)


def _emit(graphs, path):
    lines = [graph6.encode(g) for g in graphs]
    if path is None:
        for line in lines:
            print(line)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.writelines(line + "\n" for line in lines)


def _parse_edge(text: str) -> tuple[int, int]:
    u, v = (int(x) for x in text.split(","))
    return u, v


def cmd_verify(args) -> int:
    failures = 0
    for i, g in enumerate(graph6.iter_file(args.file), start=1):
        reason = check_kg(g, args.k, args.g)
        if reason is None:
            print(f"line {i}: PASS")
        else:
            print(f"line {i}: FAIL {reason}")
            failures += 1
    return 1 if failures else 0


def cmd_girth(args) -> int:
    for g in graph6.iter_file(args.file):
        degrees = g.degree_sequence()
        profile = (
            "none" if not degrees
            else str(degrees[0]) if degrees[0] == degrees[-1]
            else f"{degrees[0]}..{degrees[-1]}"
        )
        gg = g.girth()
        shown = "acyclic" if gg is ACYCLIC else gg
        print(f"order={g.order} degrees={profile} girth={shown}")
    return 0


def _construct_one(args, graphs, budget) -> list[tuple[Recipe, Graph]]:
    name = args.name
    out: list[tuple[Recipe, Graph]] = []

    def batch(parent, iterator):
        cert = certificate(parent)
        for params, h in dedup_first(iterator):
            out.append((Recipe(name, (cert,), params, certificate(h)), h))

    if name == "amalgamate":
        if len(graphs) < 2:
            raise CagekitError("amalgamation needs two input graphs")
        g1, g2 = graphs[0], graphs[1]
        e1 = _parse_edge(args.e1) if args.e1 else g1.edges()[0]
        e2 = _parse_edge(args.e2) if args.e2 else g2.edges()[0]
        h = amalgamate(g1, g2, e1, e2, args.mode)
        params = {"e1": list(e1), "e2": list(e2), "mode": args.mode}
        recipe = Recipe(
            name, (certificate(g1), certificate(g2)), params, certificate(h)
        )
        return [(recipe, h)]
    for parent in graphs:
        if name == "subdivide_two":
            batch(parent, iter_subdivide_two(parent, args.target_girth, budget))
        elif name == "subdivide_three":
            batch(parent, iter_subdivide_three(parent, args.target_girth, budget))
        elif name == "subdivide_merge":
            batch(parent, iter_subdivide_merge(parent, args.target_girth, budget))
        elif name == "moore_tree_double":
            roots = range(parent.order) if args.root is None else [args.root]
            pairs = []
            for root in roots:
                matching = moore_double_matching(parent, args.radius, root, budget)
                h = apply_moore_double(parent, args.radius, root, matching)
                params = {"r": args.radius, "root": root, "matching": matching}
                pairs.append((params, h))
            batch(parent, iter(pairs))
        elif name == "delete_edges_add_vertices":
            target = args.target_girth or parent.girth()
            batch(
                parent,
                iter_delete_edges_add_vertices(
                    parent, args.edges, args.vertices, target, budget
                ),
            )
        elif name == "delete_vertices":
            target = args.target_girth or parent.girth()
            batch(
                parent,
                iter_delete_vertices(parent, args.vertices, target, budget),
            )
        elif name == "remove_biggs_tree":
            batch(parent, iter_remove_biggs_tree(parent, budget))
        elif name == "remove_perfect_matching":
            matching = find_perfect_matching(parent, budget)
            h = remove_edges(parent, matching)
            params = {"matching": [list(e) for e in matching]}
            recipe = Recipe(name, (certificate(parent),), params, certificate(h))
            out.append((recipe, h))
        elif name == "canonical_double_cover":
            h = canonical_double_cover(parent)
            recipe = Recipe(name, (certificate(parent),), {}, certificate(h))
            out.append((recipe, h))
    return out


def cmd_construct(args) -> int:
    graphs = graph6.read_file(args.infile)
    budget = Budget(args.budget)
    produced = _construct_one(args, graphs, budget)
    _emit([h for _, h in produced], args.out)
    write_recipes(args.out + ".recipes", [r for r, _ in produced])
    print(f"{len(produced)} graphs -> {args.out}", file=sys.stderr)
    return 0


def cmd_circulant(args) -> int:
    jumps = tuple(int(x) for x in args.set.split(","))
    _emit([circulant(CirculantSpec(args.n, jumps))], args.out)
    return 0


def cmd_gdgp(args) -> int:
    offsets = tuple(int(x) for x in args.K.split(","))
    _emit([gdgp(GdgpSpec(args.m, args.n, offsets))], args.out)
    return 0


def cmd_parity46(args) -> int:
    _emit([quartic_parity_graph(args.n)], args.out)
    return 0


def cmd_enumerate(args) -> int:
    spec = EnumSpec(args.k, args.n, args.min_girth, args.cap)
    found = enumerate_regular(spec)
    for g in found:
        print(graph6.encode(g))
    print(f"{len(found)} graphs")
    return 0


def cmd_spectrum(args) -> int:
    seeds = load_seeds(args.seeds, args.k, args.g)
    citations = parse_citations(args.citations) if args.citations else {}
    names = (
        tuple(args.constructions.split(","))
        if args.constructions
        else DEFAULT_CONSTRUCTIONS
    )
    config = SearchConfig(
        constructions=names, budget=args.budget, rng_seed=args.rng_seed
    )
    report = spectrum_search(args.k, args.g, seeds, args.horizon, config, citations)
    text = render_report(report)
    if args.out is None:
        print(text, end="")
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_bounds(args) -> int:
    moore = moore_bound(args.k, args.g)
    print(f"Moore={moore}")
    print(f"Sauer={sauer_bound(args.k, args.g)}")
    parity = "even orders only" if args.k % 2 else "all integer orders"
    print(f"parity={parity}")
    horizon = args.horizon if args.horizon is not None else moore + 30
    excluded = [
        str(n)
        for n in range(moore, horizon + 1)
        if parity_admissible(args.k, n) and excluded_by_excess(args.k, args.g, n)
    ]
    print(f"excess-excluded<={horizon}: {','.join(excluded) if excluded else 'none'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cagekit",
        description="Construct, verify, and search regular graphs of given girth.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check graph6 lines against (k,g)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("girth", help="order, degree profile, girth per line")
    p.add_argument("file")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("construct", help="run one construction over a file")
    p.add_argument("name", choices=CONSTRUCT_NAMES)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--target-girth", type=int, default=None)
    p.add_argument("--edges", type=int, default=3)
    p.add_argument("--vertices", type=int, default=2)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--root", type=int, default=None)
    p.add_argument("--e1", default=None, help="edge as u,v (amalgamate)")
    p.add_argument("--e2", default=None, help="edge as u,v (amalgamate)")
    p.add_argument("--mode", choices=("cross", "parallel"), default="cross")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("circulant", help="circulant graph from a connecting set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, help="comma-separated jumps")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_circulant)

    p = sub.add_parser("gdgp", help="group divisible generalized Petersen graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", required=True, help="comma-separated chord offsets")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gdgp)

    p = sub.add_parser("parity46", help="4-regular girth-6 parity-rule graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_parity46)

    p = sub.add_parser("enumerate", help="all small (k,>=g)-graphs of one order")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-girth", type=int, default=3)
    p.add_argument("--cap", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("spectrum", help="classify orders for (k,g) up to a horizon")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--seeds", required=True, help="directory of k{K}g{G}/*.g6")
    p.add_argument("--citations", default=None)
    p.add_argument("--constructions", default=None, help="comma-separated names")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--rng-seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", help="Moore and Sauer bounds plus exclusions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--horizon", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CagekitError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
