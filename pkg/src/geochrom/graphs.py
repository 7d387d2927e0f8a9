"""Geometric graphs, their derived crossing sets, and coordinate-free structures.

A GeometricGraph is a straight-line drawing: vertex ids 0..n-1 with exact
integer positions in general position, plus an abstract edge set. Crossings
are always derived from the coordinates, never stored as input.

A CrossingStructure forgets the coordinates and keeps only what geometric
homomorphisms care about: the adjacency relation and which disjoint edge
pairs cross. Its canonical form is a byte string that two structures share
exactly when some relabeling preserves adjacency, non-adjacency, crossings
and non-crossings.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import GraphFormatError
from .geometry import Point, is_general_position, segments_cross

Edge = tuple[int, int]


def _norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GeometricGraph:
    points: tuple[Point, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        n = len(self.points)
        for e in self.edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} references a missing vertex id")
            if u >= v:
                raise ValueError(f"edge {e} is not a sorted pair of distinct ids")
        if not is_general_position(self.points):
            raise ValueError("vertex positions are not in general position")

    @classmethod
    def build(cls, points: Iterable[Point | tuple[int, int]], edges: Iterable[Iterable[int]]) -> "GeometricGraph":
        pts = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
        return cls(pts, frozenset(_norm_edge(e) for e in edges))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}


@dataclass(frozen=True, order=True)
class Crossing:
    """An unordered pair of disjoint edges whose segments cross."""

    e1: Edge
    e2: Edge

    @classmethod
    def make(cls, e1: Iterable[int], e2: Iterable[int]) -> "Crossing":
        a, b = sorted((_norm_edge(e1), _norm_edge(e2)))
        return cls(a, b)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.e1) | frozenset(self.e2)

    def edges(self) -> tuple[Edge, Edge]:
        return (self.e1, self.e2)


@lru_cache(maxsize=None)
def crossings_of(G: GeometricGraph) -> frozenset[Crossing]:
    """All properly crossing disjoint edge pairs of the drawing."""
    out = set()
    es = G.sorted_edges
    pts = G.points
    for i in range(len(es)):
        u1, v1 = es[i]
        for j in range(i + 1, len(es)):
            u2, v2 = es[j]
            if u2 in (u1, v1) or v2 in (u1, v1):
                continue
            if segments_cross(pts[u1], pts[v1], pts[u2], pts[v2]):
                out.add(Crossing(es[i], es[j]))
    return frozenset(out)


def sorted_crossings(G: GeometricGraph) -> list[Crossing]:
    return sorted(crossings_of(G))


def crossing_distance(G: GeometricGraph, c1: Crossing, c2: Crossing) -> int | float:
    """Minimum graph-path distance between the vertex sets of two crossings.

    0 exactly when they share a vertex; math.inf when every pair of their
    vertices lies in different components. Distance is measured in the
    abstract graph, not the plane.
    """
    cs = crossings_of(G)
    if c1 not in cs or c2 not in cs:
        raise ValueError("both crossings must belong to the graph")
    src = c1.vertices
    dst = c2.vertices
    if src & dst:
        return 0
    adj = G.adjacency()
    dist = {v: 0 for v in src}
    queue = deque(src)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                if w in dst:
                    return dist[w]
                queue.append(w)
    return math.inf


def min_pairwise_crossing_distance(G: GeometricGraph) -> int | float:
    """Minimum crossing_distance over all unordered pairs of distinct crossings."""
    cs = sorted_crossings(G)
    best: int | float = math.inf
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            d = crossing_distance(G, cs[i], cs[j])
            if d < best:
                best = d
                if best == 0:
                    return 0
    return best


CrossingPair = tuple[Edge, Edge]


def _norm_crossing_pair(e1: Edge, e2: Edge) -> CrossingPair:
    return (e1, e2) if e1 < e2 else (e2, e1)


class CrossingStructure:
    """Coordinate-free record of a drawing: adjacency plus crossing pairs.

    Equality and hashing go through the canonical form, so two structures
    compare equal exactly when they are geometrically isomorphic.
    """

    __slots__ = ("n", "adjacency", "crossings", "_canonical")

    def __init__(self, n: int, adjacency: Iterable[Edge], crossings: Iterable[CrossingPair]):
        adj = frozenset(_norm_edge(e) for e in adjacency)
        crs = frozenset(_norm_crossing_pair(_norm_edge(a), _norm_edge(b)) for a, b in crossings)
        for u, v in adj:
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        for e1, e2 in crs:
            if e1 not in adj or e2 not in adj:
                raise ValueError(f"crossing {e1}x{e2} uses a non-edge")
            if set(e1) & set(e2):
                raise ValueError(f"crossing {e1}x{e2} is not a disjoint pair")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "crossings", crs)
        object.__setattr__(self, "_canonical", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("CrossingStructure is immutable")

    @property
    def canonical_form(self) -> bytes:
        if self._canonical is None:
            object.__setattr__(self, "_canonical", _canonical_bytes(self.n, self.adjacency, self.crossings))
        return self._canonical

    @property
    def hex(self) -> str:
        return self.canonical_form.hex()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrossingStructure):
            return NotImplemented
        return self.canonical_form == other.canonical_form

    def __hash__(self) -> int:
        return hash(self.canonical_form)

    def __repr__(self) -> str:
        return f"CrossingStructure(n={self.n}, edges={len(self.adjacency)}, crossings={len(self.crossings)})"


def crossing_structure(G: GeometricGraph) -> CrossingStructure:
    return CrossingStructure(G.n, G.edges, [c.edges() for c in crossings_of(G)])


# --- canonicalization -------------------------------------------------------
#
# Vertices are first partitioned by label-independent invariants (degree,
# crossing degree, then iterated refinement over neighbor / crossing-partner
# class multisets). Any isomorphism must respect the ordered partition, so
# the canonical form is the lexicographically least serialization over all
# partition-respecting relabelings. For highly symmetric structures this
# degrades to trying all permutations, which is fine at catalog sizes.

_CANDIDATE_CAP = 10_000_000


def _refine_partition(n: int, adj: list[set[int]], incid: list[list[tuple[int, tuple[int, int]]]]) -> list[list[int]]:
    # incid[v]: list of (partner, (a, b)) per crossing where v's edge partner
    # is `partner` and the opposite edge is {a, b}.
    classes = [0] * n
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted(classes[u] for u in adj[v]))
            crs = tuple(
                sorted(
                    (classes[p], tuple(sorted((classes[a], classes[b]))))
                    for p, (a, b) in incid[v]
                )
            )
            sigs.append((classes[v], len(adj[v]), len(incid[v]), nbr, crs))
        order = sorted(set(sigs))
        new = [order.index(s) for s in sigs]
        if new == classes:
            break
        classes = new
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(classes[v], []).append(v)
    return [groups[c] for c in sorted(groups)]


def _canonical_bytes(n: int, adjacency: frozenset[Edge], crossings: frozenset[CrossingPair]) -> bytes:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in adjacency:
        adj[u].add(v)
        adj[v].add(u)
    incid: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in range(n)]
    for (a, b), (c, d) in crossings:
        incid[a].append((b, (c, d)))
        incid[b].append((a, (c, d)))
        incid[c].append((d, (a, b)))
        incid[d].append((c, (a, b)))

    partition = _refine_partition(n, adj, incid)
    total = 1
    for block in partition:
        total *= math.factorial(len(block))
        if total > _CANDIDATE_CAP:
            raise RuntimeError(f"canonicalization too symmetric for n={n} ({total} candidates)")

    edge_list = sorted(adjacency)
    cross_list = sorted(crossings)
    best: tuple | None = None
    pos_blocks = []
    start = 0
    for block in partition:
        pos_blocks.append(list(range(start, start + len(block))))
        start += len(block)

    perm = [0] * n
    for assignment in itertools.product(*(itertools.permutations(b) for b in pos_blocks)):
        for block, positions in zip(partition, assignment):
            for v, pos in zip(block, positions):
                perm[v] = pos
        es = sorted(
            (perm[u] * n + perm[v]) if perm[u] < perm[v] else (perm[v] * n + perm[u])
            for u, v in edge_list
        )
        n2 = n * n
        cs = []
        for (u, v), (x, y) in cross_list:
            e1 = (perm[u] * n + perm[v]) if perm[u] < perm[v] else (perm[v] * n + perm[u])
            e2 = (perm[x] * n + perm[y]) if perm[x] < perm[y] else (perm[y] * n + perm[x])
            cs.append(e1 * n2 + e2 if e1 < e2 else e2 * n2 + e1)
        cs.sort()
        key = (tuple(es), tuple(cs))
        if best is None or key < best:
            best = key
    assert best is not None
    out = bytearray()
    out += n.to_bytes(2, "big")
    out += len(best[0]).to_bytes(2, "big")
    for code in best[0]:
        out += code.to_bytes(2, "big")
    out += len(best[1]).to_bytes(2, "big")
    for code in best[1]:
        out += code.to_bytes(4, "big")
    return bytes(out)


# --- JSON graph format ------------------------------------------------------
#
# { "vertices": [ {"id": 0, "x": -10, "y": 0}, ... ], "edges": [ [0,1], ... ] }
# Writers emit vertices sorted by id and each edge as [min,max], edges sorted
# lexicographically; that makes output byte-identical across runs.


def graph_to_json_dict(G: GeometricGraph) -> dict:
    return {
        "vertices": [{"id": i, "x": p.x, "y": p.y} for i, p in enumerate(G.points)],
        "edges": [list(e) for e in G.sorted_edges],
    }


def graph_from_json_dict(doc: Mapping) -> GeometricGraph:
    if not isinstance(doc, Mapping) or "vertices" not in doc or "edges" not in doc:
        raise GraphFormatError("graph JSON must have 'vertices' and 'edges'")
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise GraphFormatError("'vertices' must be a list")
    seen: dict[int, Point] = {}
    for item in verts:
        try:
            vid, x, y = item["id"], item["x"], item["y"]
        except (TypeError, KeyError) as exc:
            raise GraphFormatError(f"vertex entry {item!r} lacks id/x/y") from exc
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in (vid, x, y)):
            raise GraphFormatError(f"vertex entry {item!r} must be all-integer")
        if vid in seen:
            raise GraphFormatError(f"duplicate vertex id {vid}")
        seen[vid] = Point(x, y)
    n = len(seen)
    if set(seen) != set(range(n)):
        raise GraphFormatError("vertex ids must be exactly 0..n-1")
    edges = []
    if not isinstance(doc["edges"], list):
        raise GraphFormatError("'edges' must be a list")
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in e)):
            raise GraphFormatError(f"edge entry {e!r} must be a pair of ids")
        u, v = e
        if u == v:
            raise GraphFormatError(f"loop edge {e!r} not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {e!r} references a missing vertex")
        edges.append(_norm_edge(e))
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edges not allowed")
    try:
        return GeometricGraph.build([seen[i] for i in range(n)], edges)
    except (ValueError, TypeError) as exc:
        raise GraphFormatError(str(exc)) from exc


def dump_graph(G: GeometricGraph) -> str:
    return json.dumps(graph_to_json_dict(G), separators=(",", ":"))


def load_graph(text: str) -> GeometricGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(doc)
