"""Command-line front end.

Verbs: chi, x, px, lift, verify, bound, gen, catalog, render. Primary output
is one JSON document on stdout (or written to -o); every reported number
comes with its witness so `verify` can replay it. Exit codes: 0 success,
1 a computation reported a negative (verify false, x unresolved, a lift
hypothesis failed), 2 invalid input. Errors print one-line JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import CatalogStore, catalog_to_json_dict, enumerate_clique_structures
from .errors import (
    ChiOutOfRange,
    CollapsedCrossingPair,
    CrossingsNotIndependent,
    DistanceTooSmall,
    Exhausted,
    GeochromError,
    GraphFormatError,
)
from .generators import (
    FIGURE_TAGS,
    figure_graphs,
    random_geometric_graph,
    separation_family,
    star_crossing,
)
from .catalog import convex_clique
from .graphs import (
    GeometricGraph,
    crossings_of,
    graph_from_json_dict,
    graph_to_json_dict,
)
from .homomorphism import (
    VertexMap,
    chromatic_number,
    geochromatic_number,
    is_geometric_hom,
    is_graph_hom,
    pseudo_geochromatic_number,
)
from .lifts import (
    find_noncollapsing_hom,
    lift_dist2,
    lift_independent,
    lift_independent_noncollapsing,
    lift_small_chi,
)
from .obstructions import non_identifiable_pairs

NEGATIVE_ERRORS = (DistanceTooSmall, CrossingsNotIndependent, CollapsedCrossingPair,
                   ChiOutOfRange, Exhausted)


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON: {exc}") from exc


def _load_graph(path: str) -> GeometricGraph:
    return graph_from_json_dict(_read_json(path))


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, separators=(",", ":"))
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _cmd_chi(args) -> int:
    g = _load_graph(args.graph)
    n, coloring = chromatic_number(g)
    _emit({"chi": n, "coloring": list(coloring.colors)}, args.output)
    return 0


def _cmd_px(args) -> int:
    g = _load_graph(args.graph)
    n, coloring = pseudo_geochromatic_number(g)
    _emit({"px": n, "coloring": list(coloring.colors)}, args.output)
    return 0


def _cmd_x(args) -> int:
    g = _load_graph(args.graph)
    store = CatalogStore(args.catalog, build_missing=not args.no_build)
    result = geochromatic_number(g, store, max_n=args.max_n)
    if result is None:
        _emit({"status": "unresolved", "searched_to": args.max_n}, args.output)
        return 1
    _emit(
        {
            "x": result.n,
            "target": {"n": result.target.n, "canonical": result.target.hex},
            "map": list(result.witness.images),
        },
        args.output,
    )
    return 0


_LIFTS = {
    "dist2": lift_dist2,
    "indep2n": lift_independent_noncollapsing,
    "indep3n": lift_independent,
    "smallchi": lift_small_chi,
}


def _cmd_lift(args) -> int:
    g = _load_graph(args.graph)
    chi, alpha = chromatic_number(g)
    if args.method == "indep2n":
        alpha = None
        for n in (chi, chi + 1):
            alpha = find_noncollapsing_hom(g, n)
            if alpha is not None:
                break
        if alpha is None:
            raise CollapsedCrossingPair(
                f"no non-collapsing coloring with {chi} or {chi + 1} colors"
            )
    report = _LIFTS[args.method](g, alpha)
    _emit(report.to_json_dict(), args.output)
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.target)
    doc = _read_json(args.map)
    if isinstance(doc, dict) and "map" in doc:
        images = doc["map"]
    elif isinstance(doc, list):
        images = doc
    else:
        raise GraphFormatError("map JSON must be a list or an object with a 'map' key")
    if not (isinstance(images, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in images)):
        raise GraphFormatError("'map' must be a list of target ids")
    if len(images) != g.n or any(not 0 <= i < h.n for i in images):
        raise GraphFormatError("map shape does not match the graphs")
    f = VertexMap(tuple(images), h.n)
    graph_ok = is_graph_hom(g, h, f)
    geo_ok = graph_ok and is_geometric_hom(g, h, f)
    _emit({"graph_hom": graph_ok, "geometric_hom": geo_ok}, args.output)
    return 0 if geo_ok else 1


def _cmd_bound(args) -> int:
    g = _load_graph(args.graph)
    dg = non_identifiable_pairs(g, path_cap=args.path_cap)
    value, _ = chromatic_number((dg.n, dg.forced_pairs))
    pairs = [
        {"pair": list(p), "rules": sorted(dg.provenance[p])}
        for p in sorted(dg.forced_pairs)
    ]
    _emit({"lower_bound": value, "pairs": pairs}, args.output)
    return 0


def _cmd_gen(args) -> int:
    fam = args.family
    if fam == "star":
        g, _ = star_crossing(args.k)
    elif fam == "separation":
        g = separation_family(args.n)
    elif fam == "convex":
        g = convex_clique(args.n)
    elif fam == "random":
        g = random_geometric_graph(
            args.vertices, args.prob, min_crossing_distance=args.min_dist, seed=args.seed
        )
    elif fam in FIGURE_TAGS:
        g = figure_graphs(fam)
    else:  # pragma: no cover - argparse restricts choices
        raise GraphFormatError(f"unknown family {fam}")
    _emit(graph_to_json_dict(g), args.output)
    return 0


def _cmd_catalog(args) -> int:
    if args.out:
        store = CatalogStore(args.out, grid_start=args.grid_start)
        cat = store.get(args.n)
        path = store.path_for(args.n)
        summary = {"n": cat.n, "entries": len(cat.entries), "grid_bound": cat.grid_bound,
                   "converged": cat.converged, "path": str(path)}
        print(json.dumps(summary, separators=(",", ":")))
    else:
        cat = enumerate_clique_structures(args.n, grid_start=args.grid_start)
        print(json.dumps(catalog_to_json_dict(cat), separators=(",", ":")))
    return 0


def _segment_intersection_point(p1, p2, q1, q2) -> tuple[float, float]:
    rx, ry = p2.x - p1.x, p2.y - p1.y
    sx, sy = q2.x - q1.x, q2.y - q1.y
    denom = rx * sy - ry * sx
    t = Fraction((q1.x - p1.x) * sy - (q1.y - p1.y) * sx, denom)
    return (float(p1.x + t * rx), float(p1.y + t * ry))


def render_svg(g: GeometricGraph, size: int = 640) -> str:
    """Plain SVG drawing: vertices as labeled circles, crossings marked red."""
    xs = [p.x for p in g.points] or [0]
    ys = [p.y for p in g.points] or [0]
    minx, maxx, miny, maxy = min(xs), max(xs), min(ys), max(ys)
    spanx, spany = max(maxx - minx, 1), max(maxy - miny, 1)
    pad = 30
    scale = (size - 2 * pad) / max(spanx, spany)

    def sx(x):
        return pad + (x - minx) * scale

    def sy(y):
        return size - pad - (y - miny) * scale  # flip: svg y grows downward

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    for u, v in g.sorted_edges:
        lines.append(
            f'  <line x1="{sx(g.points[u].x):.1f}" y1="{sy(g.points[u].y):.1f}" '
            f'x2="{sx(g.points[v].x):.1f}" y2="{sy(g.points[v].y):.1f}" '
            'stroke="black" stroke-width="1.5"/>'
        )
    for c in sorted(crossings_of(g)):
        (a, b), (cc, d) = c.e1, c.e2
        ix, iy = _segment_intersection_point(
            g.points[a], g.points[b], g.points[cc], g.points[d]
        )
        lines.append(
            f'  <circle cx="{sx(ix):.1f}" cy="{sy(iy):.1f}" r="4" fill="none" '
            'stroke="red" stroke-width="1.5"/>'
        )
    for i, p in enumerate(g.points):
        lines.append(
            f'  <circle cx="{sx(p.x):.1f}" cy="{sy(p.y):.1f}" r="3.5" fill="black"/>'
        )
        lines.append(
            f'  <text x="{sx(p.x) + 6:.1f}" y="{sy(p.y) - 6:.1f}" '
            f'font-family="sans-serif" font-size="12">{i}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_render(args) -> int:
    g = _load_graph(args.graph)
    svg = render_svg(g)
    if args.output:
        Path(args.output).write_text(svg, encoding="utf-8")
    else:
        print(svg, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geochrom",
        description="Exact crossing, coloring and geochromatic computations on geometric graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_output(p):
        p.add_argument("-o", "--output", help="write primary JSON here instead of stdout")
        return p

    p = with_output(sub.add_parser("chi", help="exact chromatic number with witness"))
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_chi)

    p = with_output(sub.add_parser("x", help="exact geochromatic number via catalogs"))
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=7, dest="max_n")
    p.add_argument("--catalog", default=None, help="directory with k<n>.catalog.json files")
    p.add_argument("--no-build", action="store_true", help="fail instead of building missing catalogs")
    p.set_defaults(fn=_cmd_x)

    p = with_output(sub.add_parser("px", help="exact pseudo-geochromatic number"))
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_px)

    p = with_output(sub.add_parser("lift", help="run a constructive lifting method"))
    p.add_argument("graph")
    p.add_argument("--method", required=True, choices=sorted(_LIFTS))
    p.set_defaults(fn=_cmd_lift)

    p = with_output(sub.add_parser("verify", help="check a vertex map as graph/geometric hom"))
    p.add_argument("graph")
    p.add_argument("target")
    p.add_argument("map")
    p.set_defaults(fn=_cmd_verify)

    bound = sub.add_parser("bound", help="obstruction-based bounds")
    bsub = bound.add_subparsers(dest="kind", required=True)
    p = with_output(bsub.add_parser("lower", help="non-identifiability lower bound for X"))
    p.add_argument("graph")
    p.add_argument("--path-cap", type=int, default=7, dest="path_cap")
    p.set_defaults(fn=_cmd_bound)

    p = with_output(sub.add_parser("gen", help="generate a named graph family"))
    p.add_argument("family", choices=("star", "separation", "convex", "random") + FIGURE_TAGS)
    p.add_argument("--k", type=int, default=1, help="crossing count for star")
    p.add_argument("--n", type=int, default=1, help="parameter for separation/convex")
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--prob", type=float, default=0.3)
    p.add_argument("--min-dist", type=int, default=0, choices=(0, 1, 2), dest="min_dist")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("catalog", help="enumerate clique crossing structures")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None, help="directory to persist k<n>.catalog.json")
    p.add_argument("--grid-start", type=int, default=3, dest="grid_start")
    p.set_defaults(fn=_cmd_catalog)

    p = with_output(sub.add_parser("render", help="draw the graph as SVG"))
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NEGATIVE_ERRORS as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return 1
    except (GeochromError, ValueError) as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
