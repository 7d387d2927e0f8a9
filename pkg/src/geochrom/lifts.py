"""Constructive upper bounds: lift an abstract coloring to a geometric hom.

Four methods, each turning a proper coloring alpha of G into a verified
geometric homomorphism beta into a convex clique:

  lift_dist2                    crossings pairwise at distance >= 2, target n+2
  lift_independent_noncollapsing independent crossings, alpha collapses no
                                 crossing onto a single edge, target 2n
  lift_independent              independent crossings, target 3n
  lift_small_chi                independent crossings and n in {2,3}, target 2n

Every crossing is classified by the pattern of its alpha-images (disjoint /
incident / identical, plus where the spare hull labels sit) and reassigned by
the matching proof case. Each reassignment is re-checked with the convex
crossing rule and the final map is verified end to end; a failure there is a
bug in this module, not a property of the input, and raises loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import convex_clique
from .errors import (
    ChiOutOfRange,
    CollapsedCrossingPair,
    CrossingsNotIndependent,
    DistanceTooSmall,
    LiftInternalError,
    NotProperColoring,
    SharedEndpoint,
)
from .geometry import convex_crossing_rule
from .graphs import Crossing, GeometricGraph, sorted_crossings
from .homomorphism import Coloring, VertexMap, is_geometric_hom, is_proper

Mod = tuple[int, int]  # (vertex id, new hull label)


@dataclass(frozen=True)
class LiftReport:
    method: str  # dist2 | indep2n | indep3n | smallchi
    n_source: int
    target_size: int
    beta: VertexMap
    case_log: tuple[tuple[Crossing, str], ...]

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "target_size": self.target_size,
            "map": list(self.beta.images),
            "cases": [
                {"crossing": [list(c.e1), list(c.e2)], "case": tag}
                for c, tag in self.case_log
            ],
        }


def _vertex_with(lab: list[int], edge: tuple[int, int], value: int) -> int:
    u, v = edge
    if lab[u] == value:
        return u
    assert lab[v] == value
    return v


def _dispatch(method: str, n: int, lab: list[int], cr: Crossing) -> tuple[str, list[Mod]]:
    """Case tag and label reassignments for one crossing.

    `lab` holds the base labels (alpha, or recoded alpha for smallchi); `n`
    is the label count they occupy, so spare hull room starts at n+1.
    """
    e1, e2 = cr.e1, cr.e2
    s1 = {lab[e1[0]], lab[e1[1]]}
    s2 = {lab[e2[0]], lab[e2[1]]}
    shared = s1 & s2

    if s1 == s2:
        p1, p2 = sorted(s1)
        u = _vertex_with(lab, e1, p1)
        v = _vertex_with(lab, e1, p2)
        y = _vertex_with(lab, e2, p1)
        x = _vertex_with(lab, e2, p2)
        if method == "dist2":
            return "3", [(v, n + 1), (y, n + 2)]
        if method == "indep2n":
            raise CollapsedCrossingPair(
                f"crossing {e1}x{e2} has both edges colored {sorted(s1)}"
            )
        if method == "indep3n":
            return "3", [(x, p2 + n), (u, p1 + 2 * n)]
        return "3", [(y, p1 + 1), (x, p2 + 1)]  # smallchi

    if len(shared) == 1:
        s = next(iter(shared))
        leaf1 = next(iter(s1 - shared))
        leaf2 = next(iter(s2 - shared))
        lo_edge, lo_leaf = (e1, leaf1) if leaf1 < leaf2 else (e2, leaf2)
        hi_edge, hi_leaf = (e2, leaf2) if leaf1 < leaf2 else (e1, leaf1)
        a_shared = _vertex_with(lab, lo_edge, s)
        b_shared = _vertex_with(lab, hi_edge, s)
        b_leaf = _vertex_with(lab, hi_edge, hi_leaf)
        if lo_leaf < s < hi_leaf:
            if method == "dist2":
                return "2a", [(a_shared, n + 1), (b_leaf, n + 2)]
            if method in ("indep2n", "indep3n"):
                return "2a", [(a_shared, s + n), (b_leaf, hi_leaf + n)]
            return "2a", [(a_shared, s + 1)]  # smallchi
        if s > hi_leaf:
            if method == "dist2":
                return "2b", [(b_shared, n + 1)]
            if method in ("indep2n", "indep3n"):
                return "2b", [(b_shared, s + n)]
            return "2b", [(b_shared, s + 1)]  # smallchi
        # shared value below both leaves
        if method == "dist2":
            return "2b", [(a_shared, n + 1)]
        if method in ("indep2n", "indep3n"):
            return "2b", [(a_shared, s + n)]
        return "2b", [(b_shared, s + 1)]  # smallchi

    # disjoint images: four distinct labels
    p1, p2, p3, p4 = sorted(s1 | s2)
    lo_pair = s1 if p1 in s1 else s2
    if p3 in lo_pair:
        return "1", []  # labels alternate: the images already cross
    if method == "smallchi":
        raise LiftInternalError("disjoint images cannot occur with at most 3 colors")
    if p2 in lo_pair:
        # separated: {p1,p2} then {p3,p4}
        lo_edge = e1 if s1 == {p1, p2} else e2
        hi_edge = e2 if lo_edge is e1 else e1
        v = _vertex_with(lab, lo_edge, p2)
        x = _vertex_with(lab, hi_edge, p3)
        if method == "dist2":
            return "1a", [(v, n + 1), (x, n + 2)]
        return "1a", [(v, p2 + n), (x, p3 + n)]
    # nested: {p1,p4} around {p2,p3}
    inner_edge = e1 if s1 == {p2, p3} else e2
    v = _vertex_with(lab, inner_edge, p3)
    if method == "dist2":
        return "1b", [(v, n + 1)]
    return "1b", [(v, p3 + n)]


_TARGET_FACTORS = {"dist2": None, "indep2n": 2, "indep3n": 3, "smallchi": 2}


def _run_lift(method: str, G: GeometricGraph, alpha: Coloring) -> LiftReport:
    if len(alpha.colors) != G.n:
        raise ValueError("coloring size does not match vertex count")
    if not is_proper(G, alpha):
        raise NotProperColoring(f"coloring is not proper for the {method} lift")

    n = alpha.n
    if method == "smallchi":
        if n not in (2, 3):
            raise ChiOutOfRange(f"the 2*chi lift needs 2 or 3 colors, got {n}")
        base = [2 * c - 1 for c in alpha.colors]
        target_size = 2 * n
        room = 2 * n - 1  # recoded labels occupy odd positions 1..2n-1
    elif method == "dist2":
        base = list(alpha.colors)
        target_size = n + 2
        room = n
    else:
        base = list(alpha.colors)
        target_size = _TARGET_FACTORS[method] * n
        room = n

    crossings = sorted(sorted_crossings(G), key=lambda c: (min(c.vertices), c))

    if method == "dist2":
        _require_min_distance(G, crossings, 2, DistanceTooSmall)
    else:
        _require_min_distance(G, crossings, 1, CrossingsNotIndependent)
    if method == "indep2n":
        for cr in crossings:
            lab_pairs = [
                {alpha.colors[cr.e1[0]], alpha.colors[cr.e1[1]]},
                {alpha.colors[cr.e2[0]], alpha.colors[cr.e2[1]]},
            ]
            if lab_pairs[0] == lab_pairs[1]:
                raise CollapsedCrossingPair(
                    f"crossing {cr.e1}x{cr.e2} maps onto one edge; "
                    "try find_noncollapsing_hom or lift_independent"
                )

    beta = list(base)
    log: list[tuple[Crossing, str]] = []
    for cr in crossings:
        tag, mods = _dispatch(method, room, base, cr)
        for v, new_label in mods:
            beta[v] = new_label
        f1 = (beta[cr.e1[0]], beta[cr.e1[1]])
        f2 = (beta[cr.e2[0]], beta[cr.e2[1]])
        try:
            crossing_ok = convex_crossing_rule(target_size, f1, f2)
        except SharedEndpoint:
            crossing_ok = False
        if not crossing_ok:
            raise LiftInternalError(
                f"{method} case {tag} produced non-crossing images {f1} {f2}"
            )
        log.append((cr, tag))

    if method == "dist2":
        for u, v in G.edges:
            if beta[u] == beta[v] and beta[u] > n:
                raise LiftInternalError("two adjacent vertices landed on one spare label")

    vm = VertexMap(tuple(b - 1 for b in beta), target_size)
    if not is_geometric_hom(G, convex_clique(target_size), vm):
        raise LiftInternalError(f"{method} lift failed end-to-end verification")
    return LiftReport(
        method=method,
        n_source=n,
        target_size=target_size,
        beta=vm,
        case_log=tuple(log),
    )


def _require_min_distance(G, crossings, minimum, exc) -> None:
    # Pairwise BFS is overkill here: distance >= 1 is vertex-disjointness and
    # distance >= 2 additionally forbids edges between different crossings.
    seen: dict[int, int] = {}
    for idx, cr in enumerate(crossings):
        for v in cr.vertices:
            if v in seen and seen[v] != idx:
                raise exc(f"crossings {crossings[seen[v]]} and {cr} share vertex {v}")
            seen[v] = idx
    if minimum >= 2:
        for u, v in G.edges:
            iu, iv = seen.get(u), seen.get(v)
            if iu is not None and iv is not None and iu != iv:
                raise exc(f"edge ({u},{v}) joins two different crossings (distance 1)")


def lift_dist2(G: GeometricGraph, alpha: Coloring) -> LiftReport:
    """Crossings pairwise at distance >= 2: beta into convex K_{n+2}.

    Only crossing vertices move, and only to the two spare labels n+1, n+2.
    """
    return _run_lift("dist2", G, alpha)


def lift_independent_noncollapsing(G: GeometricGraph, alpha: Coloring) -> LiftReport:
    """Independent crossings, no crossing collapsed by alpha: beta into K_{2n}.

    beta(v) is always alpha(v) or alpha(v)+n, which keeps beta proper no
    matter how crossings interleave.
    """
    return _run_lift("indep2n", G, alpha)


def lift_independent(G: GeometricGraph, alpha: Coloring) -> LiftReport:
    """Independent crossings, any proper alpha: beta into convex K_{3n}."""
    return _run_lift("indep3n", G, alpha)


def lift_small_chi(G: GeometricGraph, alpha: Coloring) -> LiftReport:
    """Independent crossings with 2 or 3 colors: beta into convex K_{2n}.

    Colors are recoded c -> 2c-1 (the K_n sits on odd hull labels) and each
    crossing bumps at most two vertices one step clockwise.
    """
    return _run_lift("smallchi", G, alpha)


def find_noncollapsing_hom(G: GeometricGraph, n: int) -> Coloring | None:
    """Proper n-coloring where no crossing has both edges on one color pair.

    Exhaustive backtracking (complete up to color permutation, which both
    constraints respect); None when no such coloring exists.
    """
    if n < 1:
        return None
    verts = G.n
    adj = [set() for _ in range(verts)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    crossings = sorted_crossings(G)
    per_vertex: list[list[int]] = [[] for _ in range(verts)]
    for idx, c in enumerate(crossings):
        for v in c.vertices:
            per_vertex[v].append(idx)

    order = sorted(range(verts), key=lambda v: (-(len(adj[v]) + len(per_vertex[v])), v))
    colors = [0] * verts

    def crossing_ok(idx: int) -> bool:
        c = crossings[idx]
        quad = c.vertices
        if any(colors[v] == 0 for v in quad):
            return True
        pair1 = frozenset((colors[c.e1[0]], colors[c.e1[1]]))
        pair2 = frozenset((colors[c.e2[0]], colors[c.e2[1]]))
        return pair1 != pair2

    def bt(i: int, used: int) -> bool:
        if i == verts:
            return True
        v = order[i]
        forbidden = {colors[w] for w in adj[v]}
        for c in range(1, min(n, used + 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if all(crossing_ok(idx) for idx in per_vertex[v]) and bt(i + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    if bt(0, 0):
        return Coloring(tuple(colors), n)
    return None
