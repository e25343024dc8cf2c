"""Graph data model with an exact integer metric.

Every graph here is finite, simple, connected and undirected, and every edge
has length one.  Distances are computed once by BFS from every vertex and
stored as integers counting *half-edges*: a graph distance of ``d`` edges is
stored as ``2*d``.  Working in half-units keeps midpoint arithmetic exact, so
nothing in this package ever touches floating point for metric quantities.

Unit conventions used across the package:

* ``*_hu``  -- half-units   (1 unit == 2 hu).   Densities, BP constants.
* ``*_qu``  -- quarter-units (1 unit == 4 qu).  Hyperbolicity, Hausdorff.
* bare ints -- whole units (cycle lengths, shortcut lengths, diameters).

Interior points of edges are addressed by :class:`PointRef` and realised on a
subdivided copy of the graph (see :class:`PointGrid`), where one hop equals
``1/t`` units.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np


class EdgeListError(ValueError):
    """Raised for malformed edge-list input (self-loop, duplicate, ...)."""


class NotConnectedError(EdgeListError):
    """Raised when the described graph is not connected."""


@dataclass(frozen=True, order=True)
class PointRef:
    """A point of the metric graph: a vertex or an interior edge point.

    Interior points sit at distance ``num/den`` along the edge ``(u, v)``
    oriented from ``u`` to ``v``; the stored form is canonical (``u < v``,
    ``num/den`` in lowest terms, ``0 < num < den``).
    """

    kind: str  # "vertex" | "interior"
    vertex: int = -1
    edge: tuple[int, int] = (-1, -1)
    num: int = 0
    den: int = 1

    @staticmethod
    def at_vertex(v: int) -> "PointRef":
        return PointRef("vertex", vertex=v)

    @staticmethod
    def on_edge(u: int, v: int, num: int, den: int) -> "PointRef":
        if not 0 < num < den:
            raise ValueError(f"interior point requires 0 < num < den, got {num}/{den}")
        if u == v:
            raise ValueError("degenerate edge")
        if u > v:
            u, v = v, u
            num = den - num
        g = gcd(num, den)
        return PointRef("interior", edge=(u, v), num=num // g, den=den // g)

    @staticmethod
    def midpoint(u: int, v: int) -> "PointRef":
        return PointRef.on_edge(u, v, 1, 2)

    def to_json(self) -> dict:
        if self.kind == "vertex":
            return {"kind": "vertex", "v": self.vertex}
        return {"kind": "interior", "edge": list(self.edge), "num": self.num, "den": self.den}

    @staticmethod
    def from_json(obj: dict) -> "PointRef":
        if obj["kind"] == "vertex":
            return PointRef.at_vertex(obj["v"])
        u, v = obj["edge"]
        return PointRef.on_edge(u, v, obj["num"], obj["den"])


class Graph:
    """Immutable simple connected unit-edge graph with its full metric.

    ``dist`` holds half-unit distances (``2 * hops``); ``hops`` is the raw
    BFS hop matrix.  Construction validates simplicity and connectivity.
    Instances are treated as immutable; all operations on them are pure.
    """

    __slots__ = ("n", "edges", "adj", "hops", "dist", "_grids", "_edge_index", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n <= 0:
            raise EdgeListError("empty graph")
        canon = set()
        for u, v in edges:
            if u == v:
                raise EdgeListError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise EdgeListError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise EdgeListError(f"duplicate edge ({e[0]}, {e[1]})")
            canon.add(e)
        self.n = n
        self.edges = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.hops = _bfs_all_pairs(self.adj)
        if self.hops.min() < 0:
            far = int(np.argwhere(self.hops[0] < 0)[0][0]) if (self.hops[0] < 0).any() else 0
            raise NotConnectedError(
                f"graph is not connected (vertex {far} unreachable from vertex 0)"
            )
        self.dist = 2 * self.hops
        self._grids: dict[int, "PointGrid"] = {}
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._cache: dict = {}  # package-internal memo (derived, never mutated data)

    # -- basic profile ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    @property
    def diameter(self) -> int:
        """Vertex diameter in whole units."""
        return int(self.hops.max())

    def d(self, u: int, v: int) -> int:
        """Distance between vertices in whole units."""
        return int(self.hops[u, v])

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        return self._edge_index[e]

    def grid(self, t: int) -> "PointGrid":
        """Memoised point grid at resolution ``t`` (1 hop = 1/t unit)."""
        if t not in self._grids:
            self._grids[t] = PointGrid(self, t)
        return self._grids[t]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bfs_all_pairs(adj) -> np.ndarray:
    n = len(adj)
    out = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = out[s]
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = row[u]
            for w in adj[u]:
                if row[w] < 0:
                    row[w] = du + 1
                    q.append(w)
    return out


# -- edge-list format ------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the one-``"u v"``-pair-per-line format (``#`` starts a comment).

    Vertex ids may be any nonnegative integers; they are used as given when
    they already form the contiguous range 0..n-1 (the canonical form written
    by :func:`dump_edge_list`), otherwise they are compacted preserving order.
    """
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    ids: set[int] = set()
    any_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        any_content = True
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        pairs.append(key)
        ids.update(key)
    if not any_content:
        raise EdgeListError("empty input")
    labels = sorted(ids)
    if labels != list(range(len(labels))):
        remap = {x: i for i, x in enumerate(labels)}
        pairs = [(remap[u], remap[v]) for u, v in pairs]
    return Graph(len(labels), pairs)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def dump_edge_list(g: Graph) -> str:
    """Canonical serialisation: sorted ``"u v"`` lines, no comments."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# -- subdivision and point grids -------------------------------------------


def subdivide(g: Graph, t: int) -> Graph:
    """Replace each edge by a path of ``t`` edges.

    Original vertices keep their ids; the interior vertices of edge number
    ``e`` (in ``g.edges`` order) are ``n + e*(t-1) + j`` for ``j`` in
    ``0..t-2``, placed from the low endpoint towards the high one.  Distances
    between original vertices scale by exactly ``t``.
    """
    if t < 1:
        raise ValueError("subdivision factor must be >= 1")
    if t == 1:
        return Graph(g.n, g.edges)
    edges = []
    for e, (u, v) in enumerate(g.edges):
        chain = [u] + [g.n + e * (t - 1) + j for j in range(t - 1)] + [v]
        edges.extend(zip(chain, chain[1:]))
    return Graph(g.n + g.m * (t - 1), edges)


class PointGrid:
    """The resolution-``t`` point set of a graph: vertices plus the interior
    points at multiples of ``1/t`` along each edge, realised as the vertices
    of the ``t``-subdivision.  One hop of the grid equals ``1/t`` units.
    """

    __slots__ = ("base", "t", "graph", "hops")

    def __init__(self, base: Graph, t: int):
        self.base = base
        self.t = t
        self.graph = subdivide(base, t)
        self.hops = self.graph.hops  # grid hops: 1 hop = 1/t unit

    @property
    def size(self) -> int:
        return self.graph.n

    def point_id(self, p: PointRef) -> int:
        if p.kind == "vertex":
            return p.vertex
        if self.t % p.den:
            raise ValueError(f"point at denominator {p.den} not on a 1/{self.t} grid")
        k = p.num * (self.t // p.den)  # hops from the low endpoint
        e = self.base.edge_index(*p.edge)
        return self.base.n + e * (self.t - 1) + (k - 1)

    def point_ref(self, pid: int) -> PointRef:
        if pid < self.base.n:
            return PointRef.at_vertex(pid)
        e, j = divmod(pid - self.base.n, self.t - 1)
        u, v = self.base.edges[e]
        return PointRef.on_edge(u, v, j + 1, self.t)

    def path_point_ids(self, vertices: Sequence[int]) -> list[int]:
        """All grid points along a walk given by base-graph vertices."""
        out = [vertices[0]]
        for u, v in zip(vertices, vertices[1:]):
            e = self.base.edge_index(u, v)
            interior = [self.base.n + e * (self.t - 1) + j for j in range(self.t - 1)]
            if u > v:
                interior.reverse()
            out.extend(interior)
            out.append(v)
        return out

    def units(self, hops: int) -> Fraction:
        return Fraction(hops, self.t)


# -- neighborhoods ----------------------------------------------------------


def neighborhood(g: Graph, p: PointRef, eps_hu: int, kind: str = "closed-ball") -> set[int]:
    """Vertices of ``g`` at distance ``= eps`` / ``< eps`` / ``<= eps`` from
    the point ``p``, with ``eps`` in half-units.

    ``kind`` is one of ``"sphere"``, ``"open-ball"``, ``"closed-ball"``.
    Distances to interior points are computed on the subdivided metric.
    """
    if eps_hu < 0:
        raise ValueError("eps must be >= 0")
    if p.kind == "vertex":
        # vertex-to-vertex distances in half-units, threshold already in hu
        lhs = g.dist[p.vertex, : g.n]
        rhs = eps_hu
    else:
        # work on an even grid that contains p: hops are 1/t units, so the
        # half-unit threshold eps_hu corresponds to eps_hu * t/2 hops
        t = p.den if p.den % 2 == 0 else 2 * p.den
        grid = g.grid(t)
        lhs = grid.hops[grid.point_id(p), : g.n]
        rhs = eps_hu * (t // 2)
    if kind == "sphere":
        sel = lhs == rhs
    elif kind == "open-ball":
        sel = lhs < rhs
    elif kind == "closed-ball":
        sel = lhs <= rhs
    else:
        raise ValueError(f"unknown neighborhood kind {kind!r}")
    return {int(w) for w in np.nonzero(sel)[0]}
