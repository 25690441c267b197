"""Reconstruct a shortest path as a polyline of junction points.

The distance formula already decides the route: through the junction
shared by the two child triangles containing the endpoints, or across the
side of the third child.  What remains is emitting the waypoints of each
leg (endpoint -> triangle corner).  A leg descends the endpoint's address
one level at a time: a symbol equal to the target corner keeps the corner
in reach and costs nothing; any other symbol forces the leg through the
junction between the current child and the target-side child, adding a
segment of that level's side length.  Legs whose endpoint is exactly a
vertex terminate exactly; otherwise they are truncated at `depth`, which
loses at most 1/2^depth per leg.

When an endpoint sits on the junction farthest from the target corner,
two equally short legs exist; the one through the smaller-numbered child
is emitted and the junction is reported in ``tie_points``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .codes import Code, canonicalize, same_point, shift
from .metric import ROUTE_EDGE, distance

_ZERO = Fraction(0)


class SamePoint(ValueError):
    """Both addresses denote one point; there is no path to reconstruct."""


class DepthTooSmall(ValueError):
    """Truncation depth lies above the level where the two addresses split."""


@dataclass(frozen=True)
class JunctionTriple:
    """The three meeting points of the child triangles of prefix `sigma`.

    p joins children 0 and 1, q joins 1 and 2, r joins 0 and 2.
    """

    sigma: tuple[int, ...]
    p: Code
    q: Code
    r: Code


@dataclass(frozen=True)
class Geodesic:
    """Depth-truncated shortest-path polyline with its exact length.

    Waypoints are canonical junction/vertex codes; the first and last
    approximate the two endpoints to within 1/2^depth each.  ``tie_points``
    lists junctions where an equally short alternative leg was dropped.
    """

    waypoints: tuple[Code, ...]
    length: Fraction
    depth: int
    route: str
    tie_points: tuple[Code, ...]

    def to_json(self) -> dict:
        return {
            "route": self.route,
            "length": {"num": self.length.numerator, "den": self.length.denominator},
            "waypoints": [str(w) for w in self.waypoints],
        }


def _corner(word: tuple[int, ...], t: int) -> Code:
    """Canonical code of corner t of the triangle addressed by `word`."""
    return canonicalize(Code(word, (t,)))


def junction_triple(sigma: tuple[int, ...] | str) -> JunctionTriple:
    """Junction points of the three child triangles of S_sigma."""
    word = tuple(int(s) for s in sigma) if isinstance(sigma, str) else tuple(sigma)
    return JunctionTriple(
        sigma=word,
        p=_corner(word + (0,), 1),
        q=_corner(word + (1,), 2),
        r=_corner(word + (0,), 2),
    )


def _leg(
    word: tuple[int, ...],
    tail: Code,
    target: int,
    depth: int,
    ties: list[Code],
) -> tuple[list[Code], Fraction]:
    """Waypoints from the point `word`+`tail` to corner `target` of S_word.

    Returns the polyline ordered from the point toward the corner and its
    exact length; if the point is not a vertex the walk stops at `depth`
    and the polyline starts at the deepest corner reached instead.
    """
    word = list(word)
    corners: list[Code] = []
    length = _ZERO
    while True:
        cur = canonicalize(tail)
        base: list[Code] | None = None
        if not cur.preperiod and len(cur.period) == 1:
            u = cur.period[0]
            if u == target:
                # the point is the target corner itself
                base = [_corner(tuple(word), target)]
            else:
                # corner-to-corner: one straight side of the current triangle
                base = [_corner(tuple(word), u), _corner(tuple(word), target)]
                length += Fraction(1, 1 << len(word))
        elif len(cur.preperiod) == 1 and len(cur.period) == 1:
            s, al = cur.preperiod[0], cur.period[0]
            if al == target or s == target:
                # the point is the junction adjacent to the target corner
                child = s if al == target else al
                base = [_corner(tuple(word) + (child,), target), _corner(tuple(word), target)]
                length += Fraction(1, 1 << (len(word) + 1))
            else:
                # junction farthest from the corner: two equal legs, keep
                # the one through the smaller-numbered child
                here = _corner(tuple(word) + (s,), al)
                ties.append(here)
                via = min(s, al)
                base = [here, _corner(tuple(word) + (via,), target), _corner(tuple(word), target)]
                length += Fraction(1, 1 << len(word))
        elif len(word) >= depth:
            base = [_corner(tuple(word), target)]
        if base is not None:
            base.extend(reversed(corners))
            return base, length
        s = cur.symbol_at(1)
        tail = shift(cur, 1)
        if s != target:
            corners.append(_corner(tuple(word), target))
            length += Fraction(1, 1 << (len(word) + 1))
        word.append(s)


def geodesic(a: Code, b: Code, depth: int) -> Geodesic:
    """Shortest-path polyline between the points addressed by a and b.

    The route with the smaller candidate sum is realized (on an exact tie
    the junction route is emitted, tagged ``TIE``).  The exact polyline
    length differs from the true distance by at most 2^(1-depth), with
    equality gap zero whenever both endpoints are vertices reached before
    the depth cut.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if same_point(a, b):
        raise SamePoint(f"{a} and {b} denote the same point")
    result = distance(a, b)
    k = result.split_index
    if depth < k:
        raise DepthTooSmall(f"depth {depth} < split index {k}")
    sigma = tuple(a.symbol_at(i) for i in range(1, k))
    ak = a.symbol_at(k)
    bk = b.symbol_at(k)
    tail_a = shift(a, k)
    tail_b = shift(b, k)
    ties: list[Code] = []
    if result.route == ROUTE_EDGE:
        third = 3 - ak - bk
        leg_a, len_a = _leg(sigma + (ak,), tail_a, third, depth, ties)
        leg_b, len_b = _leg(sigma + (bk,), tail_b, third, depth, ties)
        waypoints = leg_a + leg_b[::-1]
        length = len_a + Fraction(1, 1 << k) + len_b
    else:
        leg_a, len_a = _leg(sigma + (ak,), tail_a, bk, depth, ties)
        leg_b, len_b = _leg(sigma + (bk,), tail_b, ak, depth, ties)
        # both legs end on the shared junction (under twin codes); keep one
        waypoints = leg_a + leg_b[::-1][1:]
        length = len_a + len_b
    return Geodesic(tuple(waypoints), length, depth, result.route, tuple(ties))
