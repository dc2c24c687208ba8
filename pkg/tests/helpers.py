"""Independent oracles and fixture builders shared across the test suite.

The naive solvers here deliberately avoid the package's search code: they
enumerate colorings outright (with only the first vertex's color pinned,
which is sound because permuting colors preserves validity) and check
validity with direct loops.  They exist to cross-examine the solvers, so
they must stay independent of them.
"""

from __future__ import annotations

import itertools
import random

from dynachrome import Graph, Hypergraph


def adjacency(g: Graph) -> list[tuple[int, ...]]:
    return list(g.adjacency)


def valid_proper(adj, colors) -> bool:
    for u, nbrs in enumerate(adj):
        for v in nbrs:
            if v > u and colors[u] == colors[v]:
                return False
    return True


def valid_dynamic(adj, colors) -> bool:
    if not valid_proper(adj, colors):
        return False
    for u, nbrs in enumerate(adj):
        if len(nbrs) >= 2 and len({colors[v] for v in nbrs}) < 2:
            return False
    return True


def _naive_min_palette(adj, valid, kmax=None) -> int:
    n = len(adj)
    if n == 0:
        return 0
    for k in range(1, (kmax or n) + 1):
        for rest in itertools.product(range(k), repeat=n - 1):
            if valid(adj, (0,) + rest):
                return k
    raise AssertionError("no coloring found up to kmax")


def naive_chromatic(g: Graph, kmax=None) -> int:
    return _naive_min_palette(adjacency(g), valid_proper, kmax)


def naive_dynamic_chromatic(g: Graph, kmax=None) -> int:
    return _naive_min_palette(adjacency(g), valid_dynamic, kmax)


def brute_force_triangle_vertices(g: Graph) -> set[int]:
    """Triangle membership by scanning all vertex triples."""
    out: set[int] = set()
    adj = [set(a) for a in g.adjacency]
    for a, b, c in itertools.combinations(range(g.n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            out.update((a, b, c))
    return out


def brute_force_double_total_sets(g: Graph) -> list[frozenset[int]]:
    """All double total dominating sets by checking every one of 2^n subsets."""
    out = []
    for mask in range(2 ** g.n):
        t = {v for v in range(g.n) if mask >> v & 1}
        ok = True
        for v in range(g.n):
            nbrs = g.adjacency[v]
            inside = sum(1 for u in nbrs if u in t)
            if inside == 0 or inside == len(nbrs):
                ok = False
                break
        if ok:
            out.append(frozenset(t))
    return out


# Seven points, seven 3-element lines, every two lines meeting: the
# smallest 3-uniform hypergraph admitting no 2-coloring.
FANO_LINES = [
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
]


def fano_plane() -> Hypergraph:
    return Hypergraph.from_edges(7, FANO_LINES)


def triangle_hypergraph() -> Hypergraph:
    """K3 viewed as a 2-uniform hypergraph (an odd cycle, not 2-colorable)."""
    return Hypergraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def random_uniform_hypergraph(
    n: int, m: int, size: int, max_degree: int, seed: int
) -> Hypergraph:
    """Random size-uniform hypergraph with every vertex degree <= max_degree."""
    rng = random.Random(seed)
    deg = [0] * n
    edges = []
    attempts = 0
    while len(edges) < m:
        attempts += 1
        if attempts > 100 * m:
            raise RuntimeError("could not place edges under the degree cap")
        f = rng.sample(range(n), size)
        if any(deg[v] >= max_degree for v in f):
            continue
        edges.append(tuple(f))
        for v in f:
            deg[v] += 1
    return Hypergraph.from_edges(n, edges)
