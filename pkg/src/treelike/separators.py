"""Vertex separators: plain, r-distance, and neighborhood variants.

Conventions (one ``r`` parameter throughout):

* ``r = 1`` is plain separation: a and b end up in different components of
  G minus S.
* ``r >= 2`` additionally requires every vertex of a's component and every
  vertex of b's component to be at graph distance > r (distances always in
  the metric of the whole graph G).

Being an (a, b, r)-separator is monotone under adding vertices, so the
minimal ones are the minimal elements of an upward-closed family; the r = 1
case is enumerated by neighborhood-closure generation, the r >= 2 case by a
bounded bitmask scan of the subset lattice.  Separator diameters are always
measured with the metric of G, not of an induced subgraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Graph

INF = 10**9


class InternalConsistencyError(RuntimeError):
    """A structural guarantee failed; signals an upstream bug, not bad input."""


@dataclass(frozen=True)
class SeparatorCert:
    """A vertex set certified to (r-)separate a and b."""

    S: tuple[int, ...]
    a: int
    b: int
    r: int
    comp_a: tuple[int, ...]
    comp_b: tuple[int, ...]
    minimal: bool
    diameter: int  # max distance within S, whole units, metric of G

    def to_json(self) -> dict:
        return {
            "S": list(self.S), "a": self.a, "b": self.b, "r": self.r,
            "minimal": self.minimal, "diameter": self.diameter,
        }


@dataclass(frozen=True)
class SplitSeparator:
    """The two sides of a minimal r-separator (r >= 2), split by adjacency."""

    S_a: tuple[int, ...]
    S_b: tuple[int, ...]
    diam_a: int
    diam_b: int

    @property
    def diam_min(self) -> int:
        return min(self.diam_a, self.diam_b)


def _component(g: Graph, start: int, removed) -> set[int]:
    comp = {start}
    dq = deque([start])
    while dq:
        u = dq.popleft()
        for w in g.adj[u]:
            if w in removed or w in comp:
                continue
            comp.add(w)
            dq.append(w)
    return comp


def _set_diameter(g: Graph, S) -> int:
    S = sorted(S)
    if len(S) < 2:
        return 0
    sub = g.hops[np.ix_(S, S)]
    return int(sub.max())


def r_separates(g: Graph, S, a: int, b: int, r: int = 1) -> bool:
    """Does S r-separate a and b?  (r = 1 is plain separation.)"""
    S = set(S)
    if a in S or b in S:
        raise ValueError("endpoints may not belong to the separator")
    ca = _component(g, a, S)
    if b in ca:
        return False
    if r >= 2:
        cb = _component(g, b, S)
        cross = g.hops[np.ix_(sorted(ca), sorted(cb))]
        if cross.min() <= r:
            return False
    return True


def check_separation(g: Graph, S, a: int, b: int, r: int = 1) -> SeparatorCert | None:
    """Certify S as an ab-r-separator, or None; fills the minimality flag
    by single-removal testing.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    S = frozenset(S)
    if not r_separates(g, S, a, b, r):
        return None
    minimal = all(not r_separates(g, S - {v}, a, b, r) for v in S)
    ca = _component(g, a, S)
    cb = _component(g, b, S)
    return SeparatorCert(
        tuple(sorted(S)), a, b, r, tuple(sorted(ca)), tuple(sorted(cb)),
        minimal, _set_diameter(g, S),
    )


def minimalize(g: Graph, S, a: int, b: int, r: int = 1, keep=()) -> set[int]:
    """Shrink S to an inclusion-minimal ab-r-separator containing ``keep``.

    Vertices are tried for removal in ascending id order; monotonicity of
    r-separation makes the single greedy pass sufficient for minimality.
    """
    S = set(S)
    keep = set(keep)
    if not keep <= S:
        raise ValueError("keep must be a subset of S")
    if not r_separates(g, S, a, b, r):
        raise ValueError("S does not r-separate a and b")
    for v in sorted(S - keep):
        if r_separates(g, S - {v}, a, b, r):
            S.remove(v)
    return S


def sphere_separator(g: Graph, geodesic, anchors, r: int = 1) -> SeparatorCert:
    """Minimal separator through given anchor vertices of a geodesic.

    For r = 1 the single anchor v0 is enclosed in the sphere around the
    start vertex at radius d(a, v0); for r >= 2 the anchor pair (v1, v2)
    with d(v1, v2) = r - 1 uses the union of spheres around both endpoints.
    The sphere set always separates; greedy minimalization keeping the
    anchors then yields a minimal certificate containing them.
    """
    geodesic = list(geodesic)
    a, b = geodesic[0], geodesic[-1]
    if len(geodesic) - 1 != g.d(a, b):
        raise ValueError("not a geodesic")
    for u, v in zip(geodesic, geodesic[1:]):
        if not g.has_edge(u, v):
            raise ValueError("not a path")
    interior = set(geodesic[1:-1])
    anchors = tuple(anchors)
    for v in anchors:
        if v not in interior:
            raise ValueError(f"anchor {v} not interior to the geodesic")
    if r == 1:
        (v0,) = anchors
        eps = g.d(a, v0)
        s0 = {w for w in range(g.n) if g.d(a, w) == eps}
    else:
        v1, v2 = anchors
        if g.d(v1, v2) != r - 1:
            raise ValueError(f"anchor pair must be at distance r-1 = {r - 1}")
        if g.d(a, b) <= r:
            raise ValueError("geodesic too short for an r-separator")
        if g.d(a, v1) > g.d(a, v2):
            v1, v2 = v2, v1
        eps1, eps2 = g.d(a, v1), g.d(v2, b)
        s0 = {w for w in range(g.n) if g.d(a, w) == eps1 or g.d(b, w) == eps2}
    s = minimalize(g, s0, a, b, r, keep=set(anchors))
    cert = check_separation(g, s, a, b, r)
    if cert is None or not cert.minimal or not set(anchors) <= set(cert.S):
        raise InternalConsistencyError("sphere construction lost its anchors")
    return cert


# -- enumeration: r = 1 via neighborhood closure -----------------------------


def _neighbor_set(g: Graph, comp) -> frozenset:
    out = set()
    for u in comp:
        out.update(g.adj[u])
    return frozenset(out - set(comp))


def _full_component_count(g: Graph, S: frozenset) -> int:
    seen: set[int] = set()
    full = 0
    for v in range(g.n):
        if v in S or v in seen:
            continue
        comp = _component(g, v, S)
        seen |= comp
        if _neighbor_set(g, comp) == S:
            full += 1
    return full


def all_minimal_separators(g: Graph, cap: int = 100_000) -> tuple[list[frozenset], bool]:
    """Every minimal vertex separator of g (minimal for some vertex pair).

    Generation by neighborhood closure: seed with the neighborhoods of the
    components left by deleting a closed vertex neighborhood, then close
    under the pivot step S -> N(component of G minus (S and N[x])).  A set
    qualifies iff at least two components of its complement see all of it.
    """
    seps: set[frozenset] = set()
    queue: deque[frozenset] = deque()

    def offer(S: frozenset) -> None:
        if S and S not in seps and _full_component_count(g, S) >= 2:
            seps.add(S)
            queue.append(S)

    for v in range(g.n):
        closed = set(g.adj[v]) | {v}
        seen: set[int] = set()
        for w in range(g.n):
            if w in closed or w in seen:
                continue
            comp = _component(g, w, closed)
            seen |= comp
            offer(_neighbor_set(g, comp))
    truncated = False
    while queue:
        S = queue.popleft()
        if len(seps) > cap:
            truncated = True
            break
        for x in S:
            removed = set(S) | set(g.adj[x]) | {x}
            seen = set()
            for w in range(g.n):
                if w in removed or w in seen:
                    continue
                comp = _component(g, w, removed)
                seen |= comp
                offer(_neighbor_set(g, comp))
    return sorted(seps, key=lambda s: (len(s), sorted(s))), truncated


def _minimal_separators_cached(g: Graph, cap: int) -> tuple[list[frozenset], bool]:
    key = ("all_minimal_separators", cap)
    if key not in g._cache:
        g._cache[key] = all_minimal_separators(g, cap)
    return g._cache[key]


# -- enumeration: r >= 2 via the subset lattice ------------------------------


def _mask_setup(g: Graph, r: int):
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    ball = [0] * g.n
    for v in range(g.n):
        for w in range(g.n):
            if g.hops[v, w] <= r:
                ball[v] |= 1 << w
    return nbr, ball


def _flood(nbr, start: int, allowed: int) -> int:
    comp = cur = (1 << start) & allowed
    while cur:
        nxt = 0
        x = cur
        while x:
            b = x & -x
            x ^= b
            nxt |= nbr[b.bit_length() - 1]
        cur = nxt & allowed & ~comp
        comp |= cur
    return comp


def _bits(mask: int):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def enumerate_minimal_ab_separators(
    g: Graph, a: int, b: int, r: int = 1,
    cap: int = 100_000, max_candidates: int = 18,
) -> tuple[list[SeparatorCert], bool]:
    """All inclusion-minimal ab-r-separators, deterministically ordered.

    Returns (certs, truncated).  For r = 1 this filters the global minimal
    separator list; for r >= 2 it scans subset masks in ascending size,
    skipping supersets of found separators (sound because r-separation is
    upward closed).  Graphs with more than ``max_candidates`` non-endpoint
    vertices are not scanned for r >= 2: the result is ([], True).
    """
    if a == b:
        raise ValueError("endpoints must differ")
    if r == 1:
        if g.has_edge(a, b):
            return [], False
        seps, truncated = _minimal_separators_cached(g, cap)
        out = []
        for S in seps:
            if a in S or b in S:
                continue
            ca = _component(g, a, S)
            if b in ca:
                continue
            cb = _component(g, b, S)
            if _neighbor_set(g, ca) == S and _neighbor_set(g, cb) == S:
                out.append(SeparatorCert(
                    tuple(sorted(S)), a, b, 1, tuple(sorted(ca)),
                    tuple(sorted(cb)), True, _set_diameter(g, S),
                ))
        return out, truncated
    if g.d(a, b) <= r:
        return [], False  # any two sides would sit at distance <= r
    candidates = [v for v in range(g.n) if v not in (a, b)]
    if len(candidates) > max_candidates:
        return [], True
    nbr, ball = _mask_setup(g, r)
    found_masks: list[int] = []
    certs: list[SeparatorCert] = []
    truncated = False
    for size in range(1, len(candidates) + 1):
        for combo in combinations(candidates, size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(km & mask == km for km in found_masks):
                continue
            allowed = ((1 << g.n) - 1) & ~mask
            ca = _flood(nbr, a, allowed)
            if (ca >> b) & 1:
                continue
            cb = _flood(nbr, b, allowed)
            reach = 0
            for v in _bits(ca):
                reach |= ball[v]
            if reach & cb:
                continue
            found_masks.append(mask)
            certs.append(SeparatorCert(
                tuple(combo), a, b, r,
                tuple(_bits(ca)), tuple(_bits(cb)), True,
                _set_diameter(g, combo),
            ))
            if len(certs) >= cap:
                truncated = True
                break
        if truncated:
            break
    certs.sort(key=lambda c: (len(c.S), c.S))
    return certs, truncated


# -- profiles -----------------------------------------------------------------


@dataclass
class SeparatorProfile:
    """Extremes over all minimal vertex r-separators of a graph."""

    r: int
    count: int
    max_diameter: int | None  # None when no r-separators exist
    witness: SeparatorCert | None
    max_split_min_diameter: int | None  # r >= 2 only: max of min(diam Sa, diam Sb)
    split_witness: SeparatorCert | None
    truncated: bool


def separator_diameter_profile(
    g: Graph, r: int = 1, cap: int = 100_000, max_candidates: int = 18
) -> SeparatorProfile:
    """Maximal diameter over all minimal vertex r-separators (and, for
    r >= 2, the maximal min(diam S_a, diam S_b) over all certificates).
    """
    if r == 1:
        seps, truncated = _minimal_separators_cached(g, cap)
        best: SeparatorCert | None = None
        for S in seps:
            d = _set_diameter(g, S)
            if best is None or d > best.diameter:
                a, b = _witness_pair(g, S)
                best = check_separation(g, S, a, b, 1)
        return SeparatorProfile(
            1, len(seps), best.diameter if best else None, best, None, None, truncated
        )
    truncated = False
    seen: set[tuple] = set()
    best = None
    best_split: SeparatorCert | None = None
    best_split_val = -1
    count = 0
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.d(a, b) <= r:
                continue
            certs, trunc = enumerate_minimal_ab_separators(
                g, a, b, r, cap=cap, max_candidates=max_candidates
            )
            truncated |= trunc
            for cert in certs:
                if cert.S not in seen:
                    seen.add(cert.S)
                    count += 1
                    if best is None or cert.diameter > best.diameter:
                        best = cert
                split = split_separator(g, cert)
                val = min(_set_diameter(g, split.S_a), _set_diameter(g, split.S_b))
                if val > best_split_val:
                    best_split_val = val
                    best_split = cert
    return SeparatorProfile(
        r, count, best.diameter if best else None, best,
        best_split_val if best_split else None, best_split, truncated,
    )


def _witness_pair(g: Graph, S: frozenset) -> tuple[int, int]:
    """A vertex pair for which S is a minimal separator (two full comps)."""
    fulls = []
    seen: set[int] = set()
    for v in range(g.n):
        if v in S or v in seen:
            continue
        comp = _component(g, v, S)
        seen |= comp
        if _neighbor_set(g, comp) == S:
            fulls.append(min(comp))
        if len(fulls) == 2:
            return fulls[0], fulls[1]
    raise InternalConsistencyError(f"{sorted(S)} is not a minimal separator")


def split_separator(g: Graph, cert: SeparatorCert) -> SplitSeparator:
    """Split a minimal r-separator (r >= 2) by side adjacency.

    Every vertex of a minimal certificate must touch one of the two sides
    and cannot touch both (that would put the sides at distance <= 2), and
    each S_a vertex sits at distance exactly r - 1 from S_b; violations
    mean the certificate was not produced correctly.
    """
    if cert.r < 2:
        raise ValueError("split is defined for r >= 2")
    if not cert.minimal:
        raise ValueError("split requires a minimal certificate")
    ca, cb = set(cert.comp_a), set(cert.comp_b)
    s_a, s_b = [], []
    for v in cert.S:
        hits_a = any(w in ca for w in g.adj[v])
        hits_b = any(w in cb for w in g.adj[v])
        if hits_a and hits_b:
            raise InternalConsistencyError(f"{v} adjacent to both sides with r >= 2")
        if hits_a:
            s_a.append(v)
        elif hits_b:
            s_b.append(v)
        else:
            raise InternalConsistencyError(f"{v} adjacent to neither side in minimal cert")
    for v in s_a:
        dmin = min(g.d(v, w) for w in s_b) if s_b else INF
        if dmin != cert.r - 1:
            raise InternalConsistencyError(
                f"d({v}, S_b) = {dmin} != r-1 = {cert.r - 1}"
            )
    return SplitSeparator(
        tuple(s_a), tuple(s_b),
        _set_diameter(g, s_a), _set_diameter(g, s_b),
    )


# -- neighborhood separation and obstruction ----------------------------------


@dataclass
class NeighborVerdict:
    ok: bool
    mode: str
    witness: dict = field(default_factory=dict)
    truncated: bool = False


def n_r_ball(g: Graph, S, r: int) -> set[int]:
    """Closed r-neighborhood of a vertex set, as vertices."""
    S = sorted(set(S))
    if not S:
        raise ValueError("empty set")
    d = g.hops[S].min(axis=0)
    return {v for v in range(g.n) if d[v] <= r}


def check_neighbor_separation(
    g: Graph, S, a: int, b: int, r: int, mode: str = "separator",
    geodesic_cap: int = 10_000,
) -> NeighborVerdict:
    """N_r-separation or N_r-obstruction of a vertex set S.

    separator: a and b must land in different components after the closed
    r-neighborhood of S is deleted (endpoints inside it are an error).
    obstructing: every ab-geodesic must pass within r of S; endpoints
    count, and meeting the neighborhood is equivalent to some geodesic
    vertex being within r of S.  The witness on failure is an avoiding
    geodesic (or a connecting path in separator mode).
    """
    ball = n_r_ball(g, S, r)
    if mode == "separator":
        if a in ball or b in ball:
            raise ValueError("endpoint inside the r-neighborhood of S")
        ca = _component(g, a, ball)
        if b not in ca:
            return NeighborVerdict(True, mode)
        return NeighborVerdict(False, mode, witness={
            "connecting_path": _avoiding_path(g, a, b, ball)})
    if mode == "obstructing":
        from .geodesics import _vertex_seqs

        seqs, truncated = _vertex_seqs(g, a, b, geodesic_cap)
        for seq in seqs:
            if not any(v in ball for v in seq):
                return NeighborVerdict(False, mode, witness={"geodesic": list(seq)})
        return NeighborVerdict(True, mode, truncated=truncated)
    raise ValueError(f"unknown mode {mode!r}")


def _avoiding_path(g: Graph, a: int, b: int, removed) -> list[int]:
    par = {a: None}
    dq = deque([a])
    while dq:
        u = dq.popleft()
        if u == b:
            break
        for w in g.adj[u]:
            if w in removed or w in par:
                continue
            par[w] = u
            dq.append(w)
    path = [b]
    while par[path[-1]] is not None:
        path.append(par[path[-1]])
    return path[::-1]
