"""Graph generators: stock families plus the three structured test families.

Every generator is bit-stable: the vertex numbering is fixed by the rules
documented on each function, so fixtures and witnesses stay reproducible.
Random families require an explicit seed.
"""

from __future__ import annotations

import random

from .graph import Graph


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    if n == 1:
        raise ValueError("single vertex has no edges; smallest supported path is n >= 2")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols lattice; vertex (r, c) gets id r*cols + c."""
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise ValueError("grid needs at least two vertices")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform attachment tree: vertex i (i >= 1) hangs off rng(0..i-1)."""
    if n < 2:
        raise ValueError("tree needs n >= 2")
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def erdos_renyi(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by retrying with the same stream.

    Edges are sampled in sorted pair order from ``random.Random(seed)``, so a
    given (n, p, seed) always yields the same graph.
    """
    if n < 2:
        raise ValueError("erdos_renyi needs n >= 2")
    if not 0 < p <= 1:
        raise ValueError("edge probability must be in (0, 1]")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        try:
            return Graph(n, edges)
        except ValueError:
            continue
    raise ValueError(
        f"no connected G({n}, {p}) sample within {max_tries} tries (seed {seed})"
    )


def example_2_9(N: int) -> Graph:
    """Hub path with a fully-spoked cycle attached to every hub.

    Hubs ``3..N`` form a path and get ids ``0..N-3`` (hub ``k`` is id
    ``k-3``).  Then for each ``k`` from 3 to N a cycle of length ``k`` is
    appended (ids follow in cycle order) with every cycle vertex joined to
    its hub.  Rim cycles have no chords, so no cycle of length up to N ever
    has a length-1 shortcut, while every minimal separator stays small.
    """
    if N < 3:
        raise ValueError("example_2_9 needs N >= 3")
    hubs = {k: k - 3 for k in range(3, N + 1)}
    edges = [(hubs[k], hubs[k + 1]) for k in range(3, N)]
    nxt = N - 2
    for k in range(3, N + 1):
        rim = list(range(nxt, nxt + k))
        nxt += k
        edges.extend((rim[i], rim[(i + 1) % k]) for i in range(k))
        edges.extend((hubs[k], x) for x in rim)
    return Graph(nxt, edges)


def example_3_14(A: int) -> Graph:
    """Spine with ladders of growing height over every fourth block.

    Vertices are the pairs ``(a, 0)`` for ``1 <= a <= A`` plus ``(a, b)``
    for every block ``n >= 1`` with ``4n+1 <= a <= min(4n+3, A)`` and
    ``1 <= b <= n``.  ``(a, b) ~ (a', b')`` iff the pairs differ by one in
    exactly one coordinate.  Ids are assigned in lexicographic (a, b) order.
    Minimal separators between ``(4n, 0)`` and ``(4n+4, 0)`` are the columns
    ``{(4n+2, j)}`` of diameter ``n``, so separator diameters are unbounded
    in ``A`` even though the graph stays within bounded distance of a path.
    """
    if A < 5:
        raise ValueError("example_3_14 needs A >= 5")
    verts = [(a, 0) for a in range(1, A + 1)]
    n = 1
    while 4 * n + 1 <= A:
        for a in range(4 * n + 1, min(4 * n + 3, A) + 1):
            verts.extend((a, b) for b in range(1, n + 1))
        n += 1
    verts.sort()
    idx = {p: i for i, p in enumerate(verts)}
    edges = []
    for (a, b), i in idx.items():
        for q in ((a + 1, b), (a, b + 1)):
            if q in idx:
                edges.append((i, idx[q]))
    g = Graph(len(verts), edges)
    return g


def example_3_14_vertex(A: int, a: int, b: int) -> int:
    """Id of the vertex (a, b) in :func:`example_3_14` of the same ``A``."""
    verts = [(x, 0) for x in range(1, A + 1)]
    n = 1
    while 4 * n + 1 <= A:
        for x in range(4 * n + 1, min(4 * n + 3, A) + 1):
            verts.extend((x, y) for y in range(1, n + 1))
        n += 1
    verts.sort()
    return verts.index((a, b))


def odd_cycle_wedge(K: int) -> Graph:
    """Odd cycles C3, C5, ..., C_{2K+1} glued at one shared vertex.

    The wedge point is vertex 0; cycle ``k`` (k = 1..K, length 2k+1)
    occupies the next 2k ids in cycle order starting and ending at 0.
    Geodesics between vertices are unique here, yet antipodal midpoint
    bigons in the larger cycles are far apart in Hausdorff distance.
    """
    if K < 1:
        raise ValueError("odd_cycle_wedge needs K >= 1")
    edges = []
    nxt = 1
    for k in range(1, K + 1):
        ring = [0] + list(range(nxt, nxt + 2 * k))
        nxt += 2 * k
        edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
    return Graph(nxt, edges)


GENERATORS = {
    "path": (path_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "complete": (complete_graph, ("n",)),
    "grid": (grid_graph, ("rows", "cols")),
    "random_tree": (random_tree, ("n", "seed")),
    "erdos_renyi": (erdos_renyi, ("n", "p", "seed")),
    "example_2_9": (example_2_9, ("N",)),
    "example_3_14": (example_3_14, ("A",)),
    "odd_cycle_wedge": (odd_cycle_wedge, ("K",)),
}


def generate(spec: str) -> Graph:
    """Build a graph from a ``family:arg,arg,...`` spec string.

    Examples: ``cycle:8``, ``grid:2,4``, ``erdos_renyi:12,0.25,7``.
    """
    family, _, argstr = spec.partition(":")
    if family not in GENERATORS:
        raise ValueError(f"unknown family {family!r}; known: {sorted(GENERATORS)}")
    fn, names = GENERATORS[family]
    raw = [a for a in argstr.split(",") if a] if argstr else []
    if len(raw) != len(names):
        raise ValueError(f"{family} takes {len(names)} args {names}, got {len(raw)}")
    args = []
    for name, val in zip(names, raw):
        args.append(float(val) if name == "p" else int(val))
    return fn(*args)
