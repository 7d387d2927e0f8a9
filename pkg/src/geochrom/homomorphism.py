"""Homomorphism verifiers and exact solvers for chi, X and X'.

Vertex maps are verified, never trusted: every solver result can be replayed
through the verifiers here. The chromatic solver is exact branch-and-bound
(DSATUR ordering, greedy-clique lower bound, first-fresh-color symmetry
breaking), which is plenty for the instance sizes this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .catalog import CatalogStore, CliqueCatalog
from .graphs import (
    CrossingStructure,
    Edge,
    GeometricGraph,
    crossings_of,
    sorted_crossings,
)


@dataclass(frozen=True)
class VertexMap:
    """A candidate homomorphism: images[v] is the target id of source vertex v."""

    images: tuple[int, ...]
    target_size: int

    def __post_init__(self) -> None:
        for img in self.images:
            if not 0 <= img < self.target_size:
                raise ValueError(f"image {img} outside target 0..{self.target_size - 1}")

    @property
    def source_size(self) -> int:
        return len(self.images)

    def edge_image(self, e: Edge) -> tuple[int, int] | None:
        """Image of an edge as a sorted pair, or None if it collapses."""
        a, b = self.images[e[0]], self.images[e[1]]
        if a == b:
            return None
        return (a, b) if a < b else (b, a)

    def compose(self, outer: "VertexMap") -> "VertexMap":
        """outer after self (apply self first, then outer)."""
        if outer.source_size != self.target_size:
            raise ValueError("composition size mismatch")
        return VertexMap(tuple(outer.images[i] for i in self.images), outer.target_size)


@dataclass(frozen=True)
class Coloring:
    """A map V -> {1..n}; doubles as the alpha input of the lifting methods."""

    colors: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        for c in self.colors:
            if not 1 <= c <= self.n:
                raise ValueError(f"color {c} outside 1..{self.n}")


def _as_abstract(g) -> tuple[int, frozenset[Edge]]:
    if isinstance(g, GeometricGraph):
        return g.n, g.edges
    if isinstance(g, CrossingStructure):
        return g.n, g.adjacency
    n, edges = g
    return n, frozenset(tuple(sorted(e)) for e in edges)


def _crossing_pairs(h) -> frozenset[tuple[Edge, Edge]]:
    if isinstance(h, GeometricGraph):
        return frozenset(c.edges() for c in crossings_of(h))
    if isinstance(h, CrossingStructure):
        return h.crossings
    raise TypeError(f"no crossing relation on {type(h).__name__}")


def is_graph_hom(G, H, f: VertexMap) -> bool:
    """True iff f maps every edge of G onto an edge of H (endpoints distinct)."""
    n_g, edges_g = _as_abstract(G)
    n_h, edges_h = _as_abstract(H)
    if f.source_size != n_g or f.target_size != n_h:
        return False
    for e in edges_g:
        img = f.edge_image(e)
        if img is None or img not in edges_h:
            return False
    return True


def is_geometric_hom(G: GeometricGraph, H, f: VertexMap) -> bool:
    """True iff f preserves adjacency and maps every crossing onto a crossing."""
    if not is_graph_hom(G, H, f):
        return False
    target_crossings = _crossing_pairs(H)
    for c in crossings_of(G):
        img1 = f.edge_image(c.e1)
        img2 = f.edge_image(c.e2)
        if img1 is None or img2 is None:
            return False
        if set(img1) & set(img2):
            return False
        pair = (img1, img2) if img1 < img2 else (img2, img1)
        if pair not in target_crossings:
            return False
    return True


def is_proper(G, coloring: Coloring) -> bool:
    n, edges = _as_abstract(G)
    if len(coloring.colors) != n:
        return False
    return all(coloring.colors[u] != coloring.colors[v] for u, v in edges)


def is_pseudo_coloring(G: GeometricGraph, coloring: Coloring) -> bool:
    """Proper on edges and 4 distinct colors on every crossing quadruple."""
    if not is_proper(G, coloring):
        return False
    for c in crossings_of(G):
        if len({coloring.colors[v] for v in c.vertices}) != 4:
            return False
    return True


# --- exact chromatic number -------------------------------------------------


def _adj_lists(n: int, edges: Iterable[Edge]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _greedy_clique(adj: Sequence[set[int]]) -> list[int]:
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    clique: list[int] = []
    for v in order:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    return clique


def _dsatur_greedy(adj: Sequence[set[int]]) -> list[int]:
    n = len(adj)
    colors = [0] * n
    saturation: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == 0),
            key=lambda u: (len(saturation[u]), len(adj[u]), -u),
        )
        c = 1
        while c in saturation[v]:
            c += 1
        colors[v] = c
        for w in adj[v]:
            saturation[w].add(c)
    return colors


def _exact_k_coloring(adj: Sequence[set[int]], k: int, clique: Sequence[int]) -> list[int] | None:
    """Backtracking k-colorability with the clique precolored 1..len(clique)."""
    n = len(adj)
    if len(clique) > k:
        return None
    colors = [0] * n
    for i, v in enumerate(clique):
        colors[v] = i + 1

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            sat = len({colors[w] for w in adj[v] if colors[w]})
            key = (-sat, -len(adj[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def bt(used: int) -> bool:
        v = pick()
        if v < 0:
            return True
        forbidden = {colors[w] for w in adj[v]}
        for c in range(1, min(k, used + 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if bt(max(used, c)):
                return True
            colors[v] = 0
        return False

    return colors if bt(len(clique)) else None


def chromatic_number(G) -> tuple[int, Coloring]:
    """Exact chi with a proper witness coloring using exactly chi colors."""
    n, edges = _as_abstract(G)
    if n == 0:
        return 0, Coloring((), 0)
    if not edges:
        return 1, Coloring((1,) * n, 1)
    adj = _adj_lists(n, edges)
    clique = _greedy_clique(adj)
    greedy = _dsatur_greedy(adj)
    ub = max(greedy)
    for k in range(len(clique), ub):
        col = _exact_k_coloring(adj, k, clique)
        if col is not None:
            return k, Coloring(tuple(col), k)
    return ub, Coloring(tuple(greedy), ub)


# --- geometric homomorphism search ------------------------------------------


def find_geometric_hom(G: GeometricGraph, target) -> VertexMap | None:
    """First verified geometric homomorphism G -> target, or None.

    Backtracks over source vertices in decreasing crossing-degree order.
    Prunes on adjacency, on every fully-mapped crossing, and on pairs that
    the obstruction rules force to stay distinct.
    """
    from .obstructions import non_identifiable_pairs  # cycle-breaking import

    t_n, t_adj = _as_abstract(target)
    t_cross = _crossing_pairs(target)
    n = G.n
    adj = _adj_lists(n, G.edges)
    crossings = sorted_crossings(G)
    forced = non_identifiable_pairs(G).forced_pairs

    cross_deg = [0] * n
    per_vertex: list[list[int]] = [[] for _ in range(n)]
    for idx, c in enumerate(crossings):
        for v in c.vertices:
            cross_deg[v] += 1
            per_vertex[v].append(idx)

    order = sorted(range(n), key=lambda v: (-cross_deg[v], v))
    rank = {v: i for i, v in enumerate(order)}
    images = [-1] * n

    cross_quads = [tuple(c.vertices) for c in crossings]
    cross_edges = [(c.e1, c.e2) for c in crossings]

    def consistent(v: int, t: int) -> bool:
        for u in range(n):
            tu = images[u]
            if tu < 0 or u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in forced and tu == t:
                return False
            if v in adj[u]:
                pair = (tu, t) if tu < t else (t, tu)
                if tu == t or pair not in t_adj:
                    return False
        images[v] = t
        try:
            for idx in per_vertex[v]:
                if any(images[w] < 0 for w in cross_quads[idx]):
                    continue
                e1, e2 = cross_edges[idx]
                a, b = images[e1[0]], images[e1[1]]
                c, d = images[e2[0]], images[e2[1]]
                if len({a, b, c, d}) != 4:
                    return False
                f1 = (a, b) if a < b else (b, a)
                f2 = (c, d) if c < d else (d, c)
                pair = (f1, f2) if f1 < f2 else (f2, f1)
                if pair not in t_cross:
                    return False
            return True
        finally:
            images[v] = -1

    def bt(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for t in range(t_n):
            if consistent(v, t):
                images[v] = t
                if bt(i + 1):
                    return True
                images[v] = -1
        return False

    if bt(0):
        vm = VertexMap(tuple(images), t_n)
        assert is_geometric_hom(G, target, vm)
        return vm
    return None


@dataclass(frozen=True)
class XResult:
    """A resolved geochromatic number with its verified witness."""

    n: int
    target: CrossingStructure
    witness: VertexMap


def geochromatic_number(G: GeometricGraph, catalogs: CatalogStore, max_n: int = 7) -> XResult | None:
    """Smallest n <= max_n with a geometric homomorphism into some K_n structure.

    Returns None (unresolved) when no cataloged target up to max_n admits one;
    never guesses. Search ascends n starting from the obstruction lower bound
    (sound: the bound never exceeds X), convex structure first within each n.
    """
    from .obstructions import geochromatic_lower_bound  # cycle-breaking import

    if not 1 <= max_n <= 7:
        raise ValueError(f"max_n must be in 1..7, got {max_n}")
    low = max(1, geochromatic_lower_bound(G))
    for n in range(low, max_n + 1):
        cat: CliqueCatalog = catalogs.get(n)
        for entry in cat.entries:
            f = find_geometric_hom(G, entry.structure)
            if f is not None:
                return XResult(n=n, target=entry.structure, witness=f)
    return None


def pseudo_geochromatic_number(G: GeometricGraph) -> tuple[int, Coloring]:
    """Smallest n admitting a proper coloring with 4 distinct colors per crossing.

    The quadruple constraint is exactly six pairwise-distinctness constraints,
    so X' is the chromatic number of the graph augmented with those pairs.
    """
    extra: set[Edge] = set(G.edges)
    for c in crossings_of(G):
        vs = sorted(c.vertices)
        for i in range(4):
            for j in range(i + 1, 4):
                extra.add((vs[i], vs[j]))
    n, coloring = chromatic_number((G.n, extra))
    assert is_pseudo_coloring(G, coloring)
    return n, coloring
