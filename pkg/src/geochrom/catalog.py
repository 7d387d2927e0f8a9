"""Catalogs of crossing structures realizable by geometric n-cliques.

The geochromatic number quantifies over *some* geometric clique, so solvers
need the collection of all crossing structures a straight-line K_n can have.
These are enumerated exhaustively over n-point subsets of growing integer
grids (translation-normalized; reflections collapse later via canonical
forms), deduplicated by canonical form, until two consecutive grid sizes
produce the same structure count. That is a convergence heuristic, not a
completeness proof; the acceptance suite cross-checks with random sampling.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from .errors import CatalogMissing, GraphFormatError, SizeUnsupported
from .geometry import Point, regular_polygon_points
from .graphs import (
    CrossingStructure,
    GeometricGraph,
    crossing_structure,
    graph_from_json_dict,
    graph_to_json_dict,
)

MAX_CATALOG_N = 7


@lru_cache(maxsize=None)
def convex_clique(n: int) -> GeometricGraph:
    """Complete graph on the integer regular n-gon; label i+1 = vertex id i."""
    pts = regular_polygon_points(n)
    return GeometricGraph.build(pts, itertools.combinations(range(n), 2))


@dataclass(frozen=True)
class CatalogEntry:
    structure: CrossingStructure
    witness: GeometricGraph


@dataclass(frozen=True)
class CliqueCatalog:
    n: int
    entries: tuple[CatalogEntry, ...]
    grid_bound: int
    converged: bool

    def canonical_forms(self) -> frozenset[bytes]:
        return frozenset(e.structure.canonical_form for e in self.entries)


# --- grid machinery ---------------------------------------------------------


def _edge_pairs(n: int) -> tuple[list[tuple[int, int]], list[tuple[int, int, int, int]]]:
    edges = list(itertools.combinations(range(n), 2))
    pairs = []
    for (i, j), (k, l) in itertools.combinations(edges, 2):
        if len({i, j, k, l}) == 4:
            pairs.append((i, j, k, l))
    return edges, pairs


@lru_cache(maxsize=8)
def _grid_tables(g: int) -> tuple[list[int], set[int], set[int]]:
    """Per-grid lookup tables: y coordinate, collinear triples, crossing pairs.

    Point index is x*g + y (so ascending index means ascending x). Triples are
    coded (a*g2 + b)*g2 + c with a < b < c; segment pairs are coded
    ((a*g2 + b)*g2 + c)*g2 + d with a < b, c < d, (a,b) < (c,d).
    """
    g2 = g * g
    px = [i // g for i in range(g2)]
    py = [i % g for i in range(g2)]
    collinear: set[int] = set()
    for a, b, c in itertools.combinations(range(g2), 3):
        if (px[b] - px[a]) * (py[c] - py[a]) == (py[b] - py[a]) * (px[c] - px[a]):
            collinear.add((a * g2 + b) * g2 + c)
    crossing: set[int] = set()
    segs = list(itertools.combinations(range(g2), 2))
    for s in range(len(segs)):
        a, b = segs[s]
        ax, ay = px[a], py[a]
        bx, by = px[b], py[b]
        abx, aby = bx - ax, by - ay
        for t in range(s + 1, len(segs)):
            c, d = segs[t]
            if c == a or c == b or d == a or d == b:
                continue
            cx, cy = px[c], py[c]
            dx, dy = px[d], py[d]
            d1 = abx * (cy - ay) - aby * (cx - ax)
            d2 = abx * (dy - ay) - aby * (dx - ax)
            if d1 * d2 >= 0:
                continue
            cdx, cdy = dx - cx, dy - cy
            d3 = cdx * (ay - cy) - cdy * (ax - cx)
            d4 = cdx * (by - cy) - cdy * (bx - cx)
            if d3 * d4 < 0:
                crossing.add(((a * g2 + b) * g2 + c) * g2 + d)
    return py, collinear, crossing


def _scan_grid(n: int, g: int, shell_only: bool, consume) -> None:
    """Feed (crossing mask, point tuple) for each general-position subset.

    Only translation-normalized subsets (min x = min y = 0) are visited.
    With shell_only, subsets that fit the (g-1)-grid are skipped; unioning
    shells over growing g therefore covers every normalized subset once.
    """
    g2 = g * g
    py, collinear, crossing = _grid_tables(g)
    triples = list(itertools.combinations(range(n), 3))
    _, pairs = _edge_pairs(n)
    xmax_floor = g2 - g  # indices with x == g-1
    getter = py.__getitem__
    for sub in itertools.combinations(range(g2), n):
        if sub[0] >= g:  # min x > 0
            continue
        yvals = list(map(getter, sub))
        if min(yvals) != 0:
            continue
        if shell_only and sub[-1] < xmax_floor and max(yvals) < g - 1:
            continue
        ok = True
        for a, b, c in triples:
            if (sub[a] * g2 + sub[b]) * g2 + sub[c] in collinear:
                ok = False
                break
        if not ok:
            continue
        mask = 0
        bit = 1
        for i, j, k, l in pairs:
            if ((sub[i] * g2 + sub[j]) * g2 + sub[k]) * g2 + sub[l] in crossing:
                mask |= bit
            bit <<= 1
        consume(mask, sub, g)
    return None


def _decode_mask(n: int, mask: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    _, pairs = _edge_pairs(n)
    out = []
    bit = 1
    for i, j, k, l in pairs:
        if mask & bit:
            out.append(((i, j), (k, l)))
        bit <<= 1
    return out


def _structure_from_mask(n: int, mask: int, canonical: bytes) -> CrossingStructure:
    cs = CrossingStructure(n, itertools.combinations(range(n), 2), _decode_mask(n, mask))
    object.__setattr__(cs, "_canonical", canonical)
    return cs


class _Collector:
    """Dedupes subsets by canonical form, memoizing per labeled crossing mask."""

    def __init__(self, n: int):
        self.n = n
        self.edges, _ = _edge_pairs(n)
        self.mask_canon: dict[int, bytes] = {}
        self.found: dict[bytes, tuple[int, tuple[tuple[int, int], ...]]] = {}

    def __call__(self, mask: int, sub: tuple[int, ...], g: int) -> None:
        canon = self.mask_canon.get(mask)
        if canon is None:
            canon = _structure_from_mask_canonical(self.n, mask)
            self.mask_canon[mask] = canon
        if canon not in self.found:
            pts = tuple((i // g, i % g) for i in sub)
            self.found[canon] = (mask, pts)


def _structure_from_mask_canonical(n: int, mask: int) -> bytes:
    cs = CrossingStructure(n, itertools.combinations(range(n), 2), _decode_mask(n, mask))
    return cs.canonical_form


def enumerate_clique_structures(n: int, grid_start: int = 3) -> CliqueCatalog:
    """All crossing structures of straight-line K_n drawings, with witnesses.

    Grows the grid until two consecutive sizes yield the same (nonzero)
    structure count, then reports converged=True and the final grid size.
    """
    if not 3 <= n <= MAX_CATALOG_N:
        raise SizeUnsupported(f"clique structure enumeration supports n in 3..{MAX_CATALOG_N}, got {n}")
    if grid_start < 2:
        grid_start = 2
    collector = _Collector(n)
    g = grid_start
    prev_count: int | None = None
    first = True
    while True:
        _scan_grid(n, g, shell_only=not first, consume=collector)
        first = False
        count = len(collector.found)
        if prev_count is not None and count == prev_count and count > 0:
            break
        prev_count = count
        g += 1
    entries = []
    for canon in sorted(collector.found):
        mask, pts = collector.found[canon]
        witness = GeometricGraph.build(
            [Point(x, y) for x, y in pts], itertools.combinations(range(n), 2)
        )
        entries.append(CatalogEntry(_structure_from_mask(n, mask, canon), witness))
    entries = _convex_first(n, entries)
    return CliqueCatalog(n=n, entries=tuple(entries), grid_bound=g, converged=True)


def _convex_first(n: int, entries: list[CatalogEntry]) -> list[CatalogEntry]:
    if n < 3:
        return entries
    convex = crossing_structure(convex_clique(n)).canonical_form
    return sorted(entries, key=lambda e: (e.structure.canonical_form != convex, e.structure.canonical_form))


def structures_on_grid(n: int, g: int) -> frozenset[bytes]:
    """Canonical forms realizable on one g x g grid (full scan, for testing)."""
    collector = _Collector(n)
    _scan_grid(n, g, shell_only=False, consume=collector)
    return frozenset(collector.found)


# --- persistence ------------------------------------------------------------


def catalog_to_json_dict(cat: CliqueCatalog) -> dict:
    return {
        "n": cat.n,
        "grid_bound": cat.grid_bound,
        "converged": cat.converged,
        "entries": [
            {"witness": graph_to_json_dict(e.witness), "canonical": e.structure.hex}
            for e in cat.entries
        ],
    }


def catalog_from_json_dict(doc: Mapping) -> CliqueCatalog:
    try:
        n = doc["n"]
        grid_bound = doc["grid_bound"]
        converged = doc["converged"]
        raw_entries = doc["entries"]
    except (TypeError, KeyError) as exc:
        raise GraphFormatError("catalog JSON missing required keys") from exc
    entries = []
    for item in raw_entries:
        witness = graph_from_json_dict(item["witness"])
        structure = crossing_structure(witness)
        if structure.hex != item["canonical"]:
            raise GraphFormatError(
                f"catalog entry for n={n} does not realize its recorded canonical form"
            )
        entries.append(CatalogEntry(structure, witness))
    entries = _convex_first(n, entries)
    return CliqueCatalog(n=n, entries=tuple(entries), grid_bound=grid_bound, converged=converged)


def _trivial_catalog(n: int) -> CliqueCatalog:
    if n == 1:
        witness = GeometricGraph.build([(0, 0)], [])
    else:
        witness = GeometricGraph.build([(0, 0), (1, 0)], [(0, 1)])
    return CliqueCatalog(
        n=n,
        entries=(CatalogEntry(crossing_structure(witness), witness),),
        grid_bound=n,
        converged=True,
    )


class CatalogStore:
    """Load-or-build access to clique catalogs, one JSON file per size.

    Files are named k<n>.catalog.json inside `directory`. Built catalogs are
    persisted there when a directory is configured. Sizes 1 and 2 are the
    trivial single structures and never touch disk.
    """

    def __init__(self, directory: str | Path | None = None, build_missing: bool = True,
                 grid_start: int = 3):
        self.directory = Path(directory) if directory is not None else None
        self.build_missing = build_missing
        self.grid_start = grid_start
        self._cache: dict[int, CliqueCatalog] = {}

    def path_for(self, n: int) -> Path | None:
        if self.directory is None:
            return None
        return self.directory / f"k{n}.catalog.json"

    def get(self, n: int) -> CliqueCatalog:
        if n < 1:
            raise ValueError(f"no cliques of size {n}")
        if n in self._cache:
            return self._cache[n]
        if n <= 2:
            cat = _trivial_catalog(n)
        elif n > MAX_CATALOG_N:
            raise CatalogMissing(f"catalogs are capped at n={MAX_CATALOG_N}, requested {n}")
        else:
            cat = self._load(n)
            if cat is None:
                if not self.build_missing:
                    raise CatalogMissing(f"catalog for n={n} not found and building is disabled")
                cat = enumerate_clique_structures(n, self.grid_start)
                self._persist(cat)
        self._cache[n] = cat
        return cat

    def _load(self, n: int) -> CliqueCatalog | None:
        path = self.path_for(n)
        if path is None or not path.exists():
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return catalog_from_json_dict(json.load(fh))

    def _persist(self, cat: CliqueCatalog) -> None:
        path = self.path_for(cat.n)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(catalog_to_json_dict(cat), fh, indent=2, sort_keys=True)
            fh.write("\n")
