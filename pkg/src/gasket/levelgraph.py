"""Independent brute-force check: shortest paths on the level-n graph.

The level-n approximation graph has a vertex for every corner of every
level-n elementary triangle and an edge between the three corners of each
triangle, all hops weighing 1/2^n.  Its shortest-path metric converges to
the intrinsic metric as n grows, so BFS hop counts give an oracle that is
entirely independent of the closed-form distance: addresses are projected
onto the corner vertex of their enclosing level-n triangle and the hop
count is scaled by 2^-n.

Vertices are deduplicated by exact scaled-integer coordinates (numerators
over the common denominator 2^n), never by floats.  A built graph is
immutable and may be queried concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .codes import Code
from .geometry import Barycentric

MAX_LEVEL = 14

Vertex = tuple[int, int, int]


class LevelTooLarge(ValueError):
    """Requested level exceeds the resource guard."""


class VertexNotFound(KeyError):
    """Queried coordinates are not a vertex of the graph."""


@dataclass
class LevelGraph:
    """Unit-hop graph on the corners of all level-n elementary triangles.

    ``coords[i]`` is the scaled coordinate triple of vertex i (summing to
    2^level); ``index`` inverts it; ``adj`` holds neighbor vertex ids.
    Treat instances as immutable: they are cached and shared.
    """

    level: int
    coords: list[Vertex]
    index: dict[Vertex, int]
    adj: list[list[int]]

    @property
    def vertex_count(self) -> int:
        return len(self.coords)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: Vertex) -> int:
        return len(self.adj[self._vertex_id(v)])

    def barycentric(self, v: Vertex) -> Barycentric:
        scale = 1 << self.level
        return Barycentric(Fraction(v[0], scale), Fraction(v[1], scale), Fraction(v[2], scale))

    def _vertex_id(self, v: Vertex) -> int:
        i = self.index.get(v)
        if i is None:
            raise VertexNotFound(repr(v))
        return i


@lru_cache(maxsize=4)
def build_level_graph(n: int) -> LevelGraph:
    """Enumerate all 3^n level-n triangles and wire their corners.

    Corner t of the triangle addressed by word w sits at
    sum(e_{w_j} * 2^(n-j)) + e_t over the denominator 2^n.  Shared corners
    of adjacent triangles deduplicate by exact coordinates, which yields
    3*(3^n + 1)/2 vertices and 3^(n+1) edges.
    """
    if not 1 <= n <= MAX_LEVEL:
        raise LevelTooLarge(f"level must be within 1..{MAX_LEVEL}, got {n}")
    coords: list[Vertex] = []
    index: dict[Vertex, int] = {}
    adj: list[list[int]] = []

    def vid(v: Vertex) -> int:
        i = index.get(v)
        if i is None:
            i = len(coords)
            index[v] = i
            coords.append(v)
            adj.append([])
        return i

    def walk(j: int, t0: int, t1: int, t2: int) -> None:
        if j == 0:
            va = vid((t0 + 1, t1, t2))
            vb = vid((t0, t1 + 1, t2))
            vc = vid((t0, t1, t2 + 1))
            adj[va] += (vb, vc)
            adj[vb] += (va, vc)
            adj[vc] += (va, vb)
            return
        h = 1 << (j - 1)
        walk(j - 1, t0 + h, t1, t2)
        walk(j - 1, t0, t1 + h, t2)
        walk(j - 1, t0, t1, t2 + h)

    walk(n, 0, 0, 0)
    return LevelGraph(n, coords, index, adj)


def project(c: Code, n: int) -> Vertex:
    """Corner-0 vertex of the level-n triangle containing the point.

    This displaces the point by at most 1/2^n in intrinsic distance and
    always lands on a vertex of `build_level_graph(n)`.
    """
    if n < 1:
        raise ValueError("level must be positive")
    acc = [0, 0, 0]
    for j in range(1, n + 1):
        acc[c.symbol_at(j)] += 1 << (n - j)
    acc[0] += 1
    return (acc[0], acc[1], acc[2])


def graph_distance(g: LevelGraph, u: Vertex, v: Vertex) -> Fraction:
    """Minimum hop count between two vertices, scaled by 2^-level.

    Plain breadth-first search; all edges weigh the same, so the first
    time the target acquires a distance it is final.
    """
    su = g._vertex_id(u)
    sv = g._vertex_id(v)
    if su == sv:
        return Fraction(0)
    dist = [-1] * len(g.coords)
    dist[su] = 0
    queue = deque((su,))
    adj = g.adj
    while queue:
        cur = queue.popleft()
        d = dist[cur] + 1
        for nxt in adj[cur]:
            if dist[nxt] < 0:
                if nxt == sv:
                    return Fraction(d, 1 << g.level)
                dist[nxt] = d
                queue.append(nxt)
    raise VertexNotFound(f"no path between {u} and {v}")  # unreachable: graph is connected


def oracle_distance(a: Code, b: Code, n: int) -> Fraction:
    """Level-n graph approximation of the intrinsic distance."""
    g = build_level_graph(n)
    return graph_distance(g, project(a, n), project(b, n))
