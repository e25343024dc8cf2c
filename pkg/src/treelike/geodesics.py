"""Geodesic enumeration, Hausdorff distances and geodesic stability.

Geodesics between vertices live on the graph itself; geodesics between grid
points (vertices and edge midpoints) live on the half-grid.  Hausdorff
distances between paths are computed on the quarter grid, which is exact:
distance-to-a-path functions are piecewise linear with slope +-1 and
half-integer values at segment endpoints, so suprema over a path are always
attained at quarter points, and the inner minimum over a path is always
attained at one of its segment endpoints.

All Hausdorff and stability values are integers in quarter-units.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, PointRef


@dataclass(frozen=True)
class GeodesicPath:
    """A geodesic as an ordered point sequence at grid resolution.

    ``den`` is the resolution of the carrying grid (1 = plain vertices,
    2 = vertices and edge midpoints); ``ids`` are point ids on that grid
    and ``length_hu`` the length in half-units.
    """

    den: int
    ids: tuple[int, ...]
    length_hu: int

    def point_refs(self, g: Graph) -> tuple[PointRef, ...]:
        if self.den == 1:
            return tuple(PointRef.at_vertex(v) for v in self.ids)
        grid = g.grid(self.den)
        return tuple(grid.point_ref(i) for i in self.ids)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.ids[0], self.ids[-1]


@dataclass
class GeodesicEnumeration:
    paths: list[GeodesicPath]
    truncated: bool


def _vertex_seqs(graph: Graph, a: int, b: int, cap: int) -> tuple[list[tuple[int, ...]], bool]:
    """All shortest a->b vertex sequences of ``graph``, lexicographic order."""
    hops = graph.hops
    target = hops[a, b]
    out: list[tuple[int, ...]] = []
    truncated = False
    stack: list[tuple[int, ...]] = [(a,)]
    while stack:
        path = stack.pop()
        x = path[-1]
        if x == b:
            out.append(path)
            if len(out) >= cap:
                truncated = stack != []
                break
            continue
        rem = target - len(path) + 1
        # descending push so ascending vertices pop first
        for w in sorted(graph.adj[x], reverse=True):
            if hops[w, b] == rem - 1:
                stack.append(path + (w,))
    return out, truncated


def enumerate_geodesics(g: Graph, a: PointRef, b: PointRef, cap: int = 10_000) -> GeodesicEnumeration:
    """All geodesics between two points, deterministically ordered.

    Vertex endpoints are resolved on the graph itself; interior endpoints
    (edge midpoints) on the half-grid.  Enumeration walks the shortest-path
    predecessor DAG in lexicographic order and flags truncation at ``cap``.
    """
    if a == b:
        raise ValueError("endpoints must differ")
    if a.kind == "vertex" and b.kind == "vertex":
        seqs, trunc = _vertex_seqs(g, a.vertex, b.vertex, cap)
        return GeodesicEnumeration(
            [GeodesicPath(1, s, 2 * (len(s) - 1)) for s in seqs], trunc
        )
    grid = g.grid(2)
    ia, ib = grid.point_id(a), grid.point_id(b)
    seqs, trunc = _vertex_seqs(grid.graph, ia, ib, cap)
    return GeodesicEnumeration(
        [GeodesicPath(2, s, len(s) - 1) for s in seqs], trunc
    )


# -- quarter-grid realizations ----------------------------------------------


def _vertex_path_qpoints(g: Graph, seq) -> list[int]:
    """Quarter-grid ids along a vertex path of g."""
    return g.grid(4).path_point_ids(list(seq))


def _s2_id_to_s4(g: Graph, x: int) -> int:
    if x < g.n:
        return x
    return g.n + 3 * (x - g.n) + 1  # midpoint of edge e sits at slot 1 of 3


def _s2_path_qpoints(g: Graph, seq) -> list[int]:
    """Quarter-grid ids along a half-grid path of g.

    Half-grid paths alternate base vertices and edge midpoints; between two
    consecutive entries lies exactly one quarter point of the base edge.
    """
    out = [_s2_id_to_s4(g, seq[0])]
    for x, y in zip(seq, seq[1:]):
        mid = y if y >= g.n else x  # the midpoint end of this half-edge
        vtx = x if y >= g.n else y
        e = mid - g.n
        lo, _hi = g.edges[e]
        out.append(g.n + 3 * e + (0 if vtx == lo else 2))
        out.append(_s2_id_to_s4(g, y))
    return out


def path_qpoints(g: Graph, path: GeodesicPath) -> list[int]:
    if path.den == 1:
        return _vertex_path_qpoints(g, path.ids)
    if path.den == 2:
        return _s2_path_qpoints(g, path.ids)
    raise ValueError(f"unsupported path resolution {path.den}")


def hausdorff_distance(g: Graph, A, B) -> int:
    """Hausdorff distance between two point sets, in quarter-units.

    A and B are iterables of PointRef at denominators dividing 4; the value
    is exact on the quarter grid.
    """
    grid = g.grid(4)
    ia = [grid.point_id(p) for p in A]
    ib = [grid.point_id(p) for p in B]
    if not ia or not ib:
        raise ValueError("hausdorff_distance needs nonempty sets")
    return _hausdorff_ids(grid.hops, ia, ib)


def _hausdorff_ids(D: np.ndarray, ia, ib) -> int:
    sub = D[np.ix_(ia, ib)]
    return int(max(sub.min(axis=1).max(), sub.min(axis=0).max()))


# -- stability ----------------------------------------------------------------


@dataclass
class StabilityReport:
    """Worst Hausdorff separation between same-endpoint geodesics.

    mode "vertices": endpoints are vertices and geodesics are compared as
    vertex sets (the constant the vertex-stability arguments consume).
    mode "grid-points": endpoints range over vertices and edge midpoints
    and geodesics are compared as point sets on the quarter grid.
    """

    mode: str
    R_qu: int
    witness: dict = field(default_factory=dict)
    caps_hit: bool = False

    @property
    def R_units_num_den(self) -> tuple[int, int]:
        return self.R_qu, 4


def stability_constant(
    g: Graph,
    mode: str = "vertices",
    geodesic_cap: int = 10_000,
    pair_cap: int = 200,
) -> StabilityReport:
    """Maximal Hausdorff distance over endpoint pairs and geodesic pairs.

    ``pair_cap`` bounds how many geodesics per endpoint pair enter the
    pairwise comparison; exceeding it (or the enumeration cap) sets
    caps_hit, downgrading the value to a lower bound.
    """
    if mode == "vertices":
        return _stability_vertices(g, geodesic_cap, pair_cap)
    if mode == "grid-points":
        return _stability_grid(g, geodesic_cap, pair_cap)
    raise ValueError(f"unknown stability mode {mode!r}")


def _stability_vertices(g: Graph, geodesic_cap: int, pair_cap: int) -> StabilityReport:
    best = 0
    witness: dict = {}
    caps = False
    for a in range(g.n):
        for b in range(a + 1, g.n):
            seqs, trunc = _vertex_seqs(g, a, b, geodesic_cap)
            caps |= trunc
            if len(seqs) > pair_cap:
                seqs = seqs[:pair_cap]
                caps = True
            for i in range(len(seqs)):
                for j in range(i + 1, len(seqs)):
                    h_units = _hausdorff_ids(g.hops, seqs[i], seqs[j])
                    if 4 * h_units > best:
                        best = 4 * h_units
                        witness = {
                            "a": PointRef.at_vertex(a).to_json(),
                            "b": PointRef.at_vertex(b).to_json(),
                            "geodesic_1": list(seqs[i]),
                            "geodesic_2": list(seqs[j]),
                        }
    return StabilityReport("vertices", best, witness, caps)


def _stability_grid(g: Graph, geodesic_cap: int, pair_cap: int) -> StabilityReport:
    s2 = g.grid(2)
    d4 = g.grid(4).hops
    best = 0
    witness: dict = {}
    caps = False
    for a in range(s2.size):
        for b in range(a + 1, s2.size):
            seqs, trunc = _vertex_seqs(s2.graph, a, b, geodesic_cap)
            caps |= trunc
            if len(seqs) > pair_cap:
                seqs = seqs[:pair_cap]
                caps = True
            if len(seqs) < 2:
                continue
            qpts = [_s2_path_qpoints(g, s) for s in seqs]
            for i in range(len(qpts)):
                for j in range(i + 1, len(qpts)):
                    h = _hausdorff_ids(d4, qpts[i], qpts[j])
                    if h > best:
                        best = h
                        witness = {
                            "a": s2.point_ref(a).to_json(),
                            "b": s2.point_ref(b).to_json(),
                            "geodesic_1": [s2.point_ref(x).to_json() for x in seqs[i]],
                            "geodesic_2": [s2.point_ref(x).to_json() for x in seqs[j]],
                        }
    return StabilityReport("grid-points", best, witness, caps)
