"""Shortcuts in cycles, density radii, and the chordality-style verdicts.

Terminology (all exact, integer arithmetic):

* A *shortcut* of a cycle is a path between two cycle vertices that is
  shorter than their cycle-arc distance; it is *strict* when its interior
  avoids the cycle.
* A graph is (k, m)-chordal when every cycle of length >= k has a shortcut
  of length <= m; the densely-chordal refinement additionally asks the
  endpoints of strict shortcuts of length <= m to be spread along the cycle
  with gaps bounded by a radius rho (half-units; the strict "eps-dense for
  every eps > rho" reading).
* Cycles are classified into families: "T" (the cycle is a geodesic
  triangle for some corner points on the resolution grid, degenerate
  corners allowed), "B" (a geodesic bigon), "B0" (a bigon whose corners
  are vertices).  By convention B0 <= B <= T.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .cycles import Cycle, CycleEnumeration, enumerate_cycles
from .graph import Graph

INF = 10**9

FAMILIES = ("all", "T", "B", "B0")


@dataclass(frozen=True)
class ShortcutCert:
    """A certified shortcut: endpoints on the cycle, realizing path, length."""

    p: int
    q: int
    path: tuple[int, ...]
    length: int
    strict: bool

    def validate(self, g: Graph, c: Cycle) -> None:
        if self.path[0] != self.p or self.path[-1] != self.q:
            raise ValueError("path does not join p and q")
        for u, v in zip(self.path, self.path[1:]):
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge")
        if len(self.path) - 1 != self.length:
            raise ValueError("wrong length")
        if not self.length < c.d_c(self.p, self.q):
            raise ValueError("not shorter than the cycle arc")
        if self.strict:
            body = set(self.path[1:-1])
            if body & set(c.vertices):
                raise ValueError("strict shortcut touches the cycle")


def min_shortcut(g: Graph, c: Cycle, p: int, q: int, strict: bool = False) -> int | None:
    """Length of the shortest (strict) shortcut of ``c`` between vertices
    ``p`` and ``q``, or None when no shortcut exists between them.
    """
    if p == q:
        raise ValueError("shortcut endpoints must differ")
    dc = c.d_c(p, q)
    if not strict:
        d = g.d(p, q)
        return d if d < dc else None
    s = _strict_table(g, c)[c.position(p)][c.position(q)]
    return s if s < dc else None


def strict_shortcut_cert(g: Graph, c: Cycle, p: int, q: int) -> ShortcutCert | None:
    """Shortest strict shortcut between p and q as a replayable certificate."""
    dc = c.d_c(p, q)
    body = set(c.vertices)
    best: tuple[int, ...] | None = None
    if g.has_edge(p, q) and dc > 1:
        best = (p, q)
    if best is None:
        # BFS from p through non-cycle vertices only, then hop onto q
        par = {p: None}
        dist = {p: 0}
        dq = deque([p])
        while dq:
            u = dq.popleft()
            for w in g.adj[u]:
                if w in body or w in dist:
                    continue
                dist[w] = dist[u] + 1
                par[w] = u
                dq.append(w)
        hooks = [y for y in g.adj[q] if y not in body and y in dist]
        if hooks:
            y = min(hooks, key=lambda y: (dist[y], y))
            if dist[y] + 1 < dc:
                rev = [q, y]
                while par[rev[-1]] is not None:
                    rev.append(par[rev[-1]])
                best = tuple(reversed(rev))
    if best is None:
        return None
    return ShortcutCert(p, q, best, len(best) - 1, strict=True)


def _strict_table(g: Graph, c: Cycle) -> list[list[int]]:
    """strict[i][j]: shortest strict-path length between cycle positions."""
    key = ("strict_table", c.vertices)
    if key in g._cache:
        return g._cache[key]
    L = c.length
    body = set(c.vertices)
    table = [[INF] * L for _ in range(L)]
    for i in range(L):
        p = c.vertices[i]
        dist = {p: 0}
        dq = deque([p])
        while dq:
            u = dq.popleft()
            for w in g.adj[u]:
                if w in body or w in dist:
                    continue
                dist[w] = dist[u] + 1
                dq.append(w)
        row = table[i]
        for j in range(L):
            if j == i:
                continue
            q = c.vertices[j]
            best = 1 if g.has_edge(p, q) else INF
            for y in g.adj[q]:
                if y not in body and y in dist:
                    best = min(best, dist[y] + 1)
            row[j] = best
    g._cache[key] = table
    return table


def shortcut_vertices(g: Graph, c: Cycle, m: int) -> set[int]:
    """Cycle vertices that end some strict shortcut of length <= m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    table = _strict_table(g, c)
    L = c.length
    out = set()
    for i in range(L):
        for j in range(i + 1, L):
            if table[i][j] <= m and table[i][j] < c.arc_dist(i, j):
                out.add(c.vertices[i])
                out.add(c.vertices[j])
    return out


def density_radius(c: Cycle, vertices: set[int]) -> int | None:
    """Radius (half-units) of the farthest cycle point from ``vertices``
    in the cycle's own arc metric; None when the set is empty (infinite).

    The set is eps-dense in the cycle exactly for every eps > the returned
    radius.  Half the largest gap between consecutive members, so an
    integer count of half-units.
    """
    unknown = vertices - set(c.vertices)
    if unknown:
        raise ValueError(f"not cycle vertices: {sorted(unknown)}")
    if not vertices:
        return None
    pos = sorted(c.position(v) for v in vertices)
    L = c.length
    gaps = [b - a for a, b in zip(pos, pos[1:])] + [pos[0] + L - pos[-1]]
    return max(gaps)  # gap g units => farthest point at g/2 units = g hu


# -- per-cycle summaries -----------------------------------------------------


@dataclass
class CycleStats:
    """Everything the chordality verdicts need to know about one cycle."""

    cycle: Cycle
    length: int
    min_plain_len: int  # min length of any (not nec. strict) shortcut; INF if none
    shortcut_m_at: list[int]  # per position: min m with a strict shortcut there
    tags: frozenset  # family tags among {"T", "B", "B0"}

    def density_radius_hu(self, m: int) -> int:
        """Density radius (hu) of the strict-shortcut vertices at bound m."""
        pos = [i for i, v in enumerate(self.shortcut_m_at) if v <= m]
        if not pos:
            return INF
        L = self.length
        gaps = [b - a for a, b in zip(pos, pos[1:])] + [pos[0] + L - pos[-1]]
        return max(gaps)


def cycle_grid(g: Graph, c: Cycle, t: int):
    """Grid geometry of a cycle at resolution t.

    Returns (point_ids, D, geo): the t*L grid points along the cycle, their
    pairwise graph distances D in 1/t units, and the boolean matrix geo with
    geo[i, j] true when the forward arc i -> j realizes the graph distance.
    """
    grid = g.grid(t)
    pts = np.array(grid.path_point_ids(list(c.vertices) + [c.vertices[0]])[:-1])
    D = grid.hops[np.ix_(pts, pts)]
    P = len(pts)
    idx = np.arange(P)
    fwd = (idx[None, :] - idx[:, None]) % P
    geo = fwd == D
    np.fill_diagonal(geo, False)
    return pts, D, geo


def classify_cycle(g: Graph, c: Cycle, t: int = 2) -> frozenset:
    """Family tags of a cycle at corner resolution t.

    "B0": two vertex corners split the cycle into two geodesic arcs.
    "B":  likewise with corners anywhere on the 1/t grid.
    "T":  three grid corners with all three arcs geodesic; degenerate
          corners are allowed, so every bigon is also tagged "T".
    """
    if t < 1:
        raise ValueError("resolution must be >= 1")
    _, _, geo = cycle_grid(g, c, t)
    P = geo.shape[0]
    bigon = geo & geo.T
    tags = set()
    if bigon.any():
        tags.add("B")
        tags.add("T")
        if bigon[::t, ::t].any():
            tags.add("B0")
    if "T" not in tags:
        idx = np.arange(P)
        order = (idx[:, None, None] < idx[None, :, None]) & (
            idx[None, :, None] < idx[None, None, :]
        )
        tri = geo[:, :, None] & geo[None, :, :] & geo.T[:, None, :]
        if (tri & order).any():
            tags.add("T")
    return frozenset(tags)


@dataclass
class ChordalityData:
    """Cycle enumeration plus per-cycle stats, computed once per graph."""

    enumeration: CycleEnumeration
    stats: list[CycleStats]
    resolution: int

    @property
    def truncated(self) -> bool:
        return self.enumeration.truncated

    @property
    def max_cycle_len(self) -> int:
        return self.stats[-1].length if self.stats else 0

    def in_family(self, family: str):
        if family == "all":
            return self.stats
        return [s for s in self.stats if family in s.tags]


def chordality_data(
    g: Graph, count_cap: int = 200_000, resolution: int = 2
) -> ChordalityData:
    key = ("chordality_data", count_cap, resolution)
    if key in g._cache:
        return g._cache[key]
    enum = enumerate_cycles(g, count_cap=count_cap)
    stats = []
    for c in enum.cycles:
        L = c.length
        table = _strict_table(g, c)
        min_plain = INF
        m_at = [INF] * L
        for i in range(L):
            vi = c.vertices[i]
            for j in range(i + 1, L):
                dc = c.arc_dist(i, j)
                dg = g.d(vi, c.vertices[j])
                if dg < dc:
                    min_plain = min(min_plain, dg)
                s = table[i][j]
                if s < dc:
                    m_at[i] = min(m_at[i], s)
                    m_at[j] = min(m_at[j], s)
        stats.append(
            CycleStats(c, L, min_plain, m_at, classify_cycle(g, c, resolution))
        )
    data = ChordalityData(enum, stats, resolution)
    g._cache[key] = data
    return data


@dataclass
class ChordalityVerdict:
    status: str  # pass | fail | vacuous | inconclusive
    k: int
    m: int | None
    rho_hu: int | None
    family: str
    witness: Cycle | None = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "vacuous")


def chordality_check(
    g: Graph,
    k: int,
    m: int | None = None,
    rho_hu: int | None = None,
    family: str = "all",
    l_max: int | None = None,
    count_cap: int = 200_000,
    resolution: int = 2,
) -> ChordalityVerdict:
    """Decide a chordality variant, scanning every cycle of length >= k.

    * m is None: every such cycle must have some shortcut (k-chordal).
    * m given, rho_hu None: a shortcut of length <= m ((k, m)-chordal).
    * rho_hu given: the strict shortcuts of length <= m must have endpoint
      vertices of density radius <= rho_hu along the cycle (densely
      (k, m)-chordal for every eps > rho_hu/2 units).

    The verdict is "vacuous" when no cycle qualifies, and "inconclusive"
    when cycle enumeration was truncated and no failing cycle was found.
    The witness is the canonically smallest failing cycle.
    """
    if k < 4:
        raise ValueError("k must be >= 4")
    if m is not None and k < 2 * m:
        raise ValueError("k must be >= 2m")
    if rho_hu is not None and m is None:
        raise ValueError("rho requires m")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    data = chordality_data(g, count_cap=count_cap, resolution=resolution)
    scanned = 0
    for st in data.in_family(family):
        if st.length < k or (l_max is not None and st.length > l_max):
            continue
        scanned += 1
        if rho_hu is not None:
            ok = st.density_radius_hu(m) <= rho_hu
        elif m is not None:
            ok = st.min_plain_len <= m
        else:
            ok = st.min_plain_len < INF
        if not ok:
            return ChordalityVerdict(
                "fail", k, m, rho_hu, family, witness=st.cycle,
                detail={"scanned": scanned},
            )
    if data.truncated:
        return ChordalityVerdict("inconclusive", k, m, rho_hu, family,
                                 detail={"scanned": scanned})
    if scanned == 0:
        return ChordalityVerdict("vacuous", k, m, rho_hu, family)
    return ChordalityVerdict("pass", k, m, rho_hu, family,
                             detail={"scanned": scanned})
