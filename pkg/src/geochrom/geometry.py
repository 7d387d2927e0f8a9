"""Exact planar primitives: orientation, proper segment crossing, convex rules.

Everything here is integer arithmetic. No floats, no epsilons: crossing
relations are combinatorial facts and the rest of the package relies on these
predicates being exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SharedEndpoint

# Keeps 3x3 orientation determinants inside 64-bit signed range so the data
# format stays portable to fixed-width implementations.
COORD_BOUND = 1 << 30


@dataclass(frozen=True, order=True)
class Point:
    """Immutable exact grid point."""

    x: int
    y: int

    def __post_init__(self) -> None:
        for c in (self.x, self.y):
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coordinates must be int, got {type(c).__name__}")
            if abs(c) > COORD_BOUND:
                raise ValueError(f"coordinate {c} exceeds the +-2^30 bound")


class Orientation(Enum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross_sign(p: Point, q: Point, r: Point) -> int:
    """Sign of the determinant |q-p, r-p| (twice the signed triangle area)."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Exact turn direction of the ordered triple (p, q, r)."""
    return Orientation(cross_sign(p, q, r))


def segments_cross(a1: Point, a2: Point, b1: Point, b2: Point) -> bool:
    """True iff the open segments (a1,a2) and (b1,b2) cross properly.

    Proper means: exactly one interior intersection point. Touching
    configurations (an endpoint on the other segment, collinear overlap)
    return False; they cannot occur under the general-position guarantee
    enforced upstream but are still answered deterministically.
    """
    if len({a1, a2, b1, b2}) != 4:
        raise SharedEndpoint("segments must have four pairwise distinct endpoints")
    d1 = cross_sign(a1, a2, b1)
    d2 = cross_sign(a1, a2, b2)
    d3 = cross_sign(b1, b2, a1)
    d4 = cross_sign(b1, b2, a2)
    return d1 * d2 < 0 and d3 * d4 < 0


def is_general_position(points: Sequence[Point]) -> bool:
    """True iff all points are distinct and no three are collinear."""
    if len(set(points)) != len(points):
        return False
    for p, q, r in combinations(points, 3):
        if cross_sign(p, q, r) == 0:
            return False
    return True


def convex_crossing_rule(n: int, e1: Iterable[int], e2: Iterable[int]) -> bool:
    """Label-only crossing test for the convex n-clique.

    Vertices 1..n sit in convex position in hull order; disjoint edges cross
    exactly when their labels alternate around the hull, i.e. (after
    normalizing a1 < a2, b1 < b2, a1 < b1) when a1 < b1 < a2 < b2.
    """
    if n < 4:
        raise ValueError(f"convex crossing rule needs n >= 4, got {n}")
    a1, a2 = sorted(e1)
    b1, b2 = sorted(e2)
    for lab in (a1, a2, b1, b2):
        if not 1 <= lab <= n:
            raise ValueError(f"label {lab} outside 1..{n}")
    if a1 == a2 or b1 == b2 or {a1, a2} & {b1, b2}:
        raise SharedEndpoint(f"edges {{{a1},{a2}}} and {{{b1},{b2}}} are not disjoint")
    if b1 < a1:
        a1, a2, b1, b2 = b1, b2, a1, a2
    return a1 < b1 < a2 < b2


def regular_polygon_points(n: int, radius: int = 10**6) -> tuple[Point, ...]:
    """Integer-rounded regular n-gon in counterclockwise hull order.

    Vertex i sits at angle 2*pi*i/n. If rounding ever breaks general
    position the radius is bumped until it holds (never triggers for the
    sizes used here, but cheap insurance).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    r = radius
    while True:
        pts = tuple(
            Point(round(r * math.cos(2 * math.pi * i / n)), round(r * math.sin(2 * math.pi * i / n)))
            for i in range(n)
        )
        if is_general_position(pts):
            return pts
        r += 1
