"""Exhaustive branch-and-bound solvers: the ground truth for small instances.

Searches assign vertices in descending-degree order (ties by id) with
color-symmetry breaking, so runs are deterministic.  Budgets are explored
node counts, not wall-clock, again for reproducibility.  A solver that
exhausts its budget reports that distinctly from a certified "none": the
two outcomes must never be conflated, because these functions serve as
oracles for the randomized modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, Hypergraph, VertexSubset, bipartition, induced_subgraph
from .graphs import is_connected, neighborhood_hypergraph
from .verify import Coloring, ListAssignment

__all__ = [
    "SolveResult",
    "SearchBudgetExceeded",
    "greedy_coloring",
    "chromatic_number",
    "dynamic_chromatic_number",
    "list_dynamic_coloring",
    "hypergraph_2color_exact",
    "is_k_critical",
    "exact_double_total_dominating",
]


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""

    def __init__(self, message: str, nodes_explored: int = 0):
        super().__init__(message)
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    ``value`` is the optimal invariant with ``witness`` attaining it, and
    optimality is certified by the failed exhaustive search at value - 1.
    When the budget ran out instead, ``exhausted`` is set, ``value`` is
    None, and ``bounds`` gives the best-known (lower, upper) interval.
    """

    value: Optional[int]
    witness: Optional[Coloring]
    nodes_explored: int
    exhausted: bool = False
    bounds: Optional[tuple[int, int]] = None

    def to_json_dict(self) -> dict:
        out = {
            "value": self.value,
            "witness": list(self.witness.colors) if self.witness else None,
            "nodes_explored": self.nodes_explored,
            "exhausted": self.exhausted,
        }
        if self.exhausted and self.bounds is not None:
            out["bounds"] = list(self.bounds)
        return out


def _degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def greedy_coloring(g: Graph, order: Optional[list[int]] = None) -> Coloring:
    """First-fit coloring in the given order (ascending ids by default)."""
    if order is None:
        order = list(range(g.n))
    color: list[Optional[int]] = [None] * g.n
    top = 0
    for v in order:
        used = {color[u] for u in g.adjacency[v] if color[u] is not None}
        c = 0
        while c in used:
            c += 1
        color[v] = c
        top = max(top, c + 1)
    return Coloring(tuple(color), max(top, 1) if g.n else 0)


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: Optional[int], already: int = 0):
        self.limit = limit
        self.nodes = already

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded("node budget exceeded", self.nodes)


def _exists_k_coloring(
    g: Graph, k: int, budget: _Budget, dynamic: bool
) -> Optional[list[int]]:
    """Backtracking search for a proper (optionally dynamic) k-coloring.

    A branch dies as soon as some vertex of degree >= 2 has its whole
    neighborhood colored in a single color (dynamic mode only).  Symmetry
    breaking: a vertex may use at most one more color than the maximum
    used so far.
    """
    n = g.n
    order = _degree_order(g)
    adj = g.adjacency
    deg = [len(a) for a in adj]
    color = [-1] * n
    uncolored_nbrs = deg[:]

    def neighborhood_bichromatic(v: int) -> bool:
        first = color[adj[v][0]]
        return any(color[u] != first for u in adj[v][1:])

    def rec(i: int, max_used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        used = {color[u] for u in adj[v] if color[u] >= 0}
        cap = min(k - 1, max_used + 1)
        for c in range(cap + 1):
            if c in used:
                continue
            budget.tick()
            color[v] = c
            ok = True
            if dynamic:
                for u in adj[v]:
                    uncolored_nbrs[u] -= 1
                for u in adj[v]:
                    if (
                        uncolored_nbrs[u] == 0
                        and deg[u] >= 2
                        and not neighborhood_bichromatic(u)
                    ):
                        ok = False
                        break
            if ok and rec(i + 1, max(max_used, c)):
                return True
            if dynamic:
                for u in adj[v]:
                    uncolored_nbrs[u] += 1
            color[v] = -1
        return False

    return color[:] if rec(0, -1) else None


def chromatic_number(g: Graph, budget: Optional[int] = None) -> SolveResult:
    """Exact chromatic number with a witness coloring.

    Palette sizes 1 and 2 are decided structurally (edge presence,
    bipartiteness); from 3 upward each size is settled by exhaustive
    backtracking, so the refuted size value - 1 certifies optimality.
    """
    if g.n == 0:
        return SolveResult(0, Coloring((), 0), 0)
    if g.edge_count == 0:
        return SolveResult(1, Coloring((0,) * g.n, 1), 0)
    bip = bipartition(g)
    if bip is not None:
        return SolveResult(2, Coloring.total(bip, 2), 0)
    tracker = _Budget(budget)
    upper = greedy_coloring(g, _degree_order(g)).palette_size
    k = 3
    while True:
        try:
            found = _exists_k_coloring(g, k, tracker, dynamic=False)
        except SearchBudgetExceeded:
            return SolveResult(
                None, None, tracker.nodes, exhausted=True, bounds=(k, upper)
            )
        if found is not None:
            return SolveResult(k, Coloring.total(found, k), tracker.nodes)
        k += 1


def dynamic_chromatic_number(g: Graph, budget: Optional[int] = None) -> SolveResult:
    """Exact dynamic chromatic number (proper, and every vertex of degree
    >= 2 sees two distinct neighbor colors) with a witness.

    When some vertex has degree >= 2 the value is at least 3: its two
    neighbors must differ from each other and from the vertex itself.
    That refutes palettes 1 and 2 without search.
    """
    if g.n == 0:
        return SolveResult(0, Coloring((), 0), 0)
    if g.max_degree <= 1:
        # No vertex is constrained, so this is plain proper coloring.
        if g.edge_count == 0:
            return SolveResult(1, Coloring((0,) * g.n, 1), 0)
        return SolveResult(2, Coloring.total(bipartition(g), 2), 0)
    tracker = _Budget(budget)
    k = 3
    while True:
        try:
            found = _exists_k_coloring(g, k, tracker, dynamic=True)
        except SearchBudgetExceeded:
            return SolveResult(
                None, None, tracker.nodes, exhausted=True, bounds=(k, g.n)
            )
        if found is not None:
            return SolveResult(k, Coloring.total(found, k), tracker.nodes)
        k += 1


def list_dynamic_coloring(
    g: Graph, lists: ListAssignment, budget: Optional[int] = None
) -> Optional[Coloring]:
    """A dynamic coloring drawing each vertex's color from its list, or a
    certified None when the exhaustive search finds no such coloring.

    Raises SearchBudgetExceeded when the budget runs out first; that is a
    distinct outcome from None.
    """
    if len(lists) != g.n:
        raise ValueError("list assignment must cover all vertices")
    n = g.n
    order = _degree_order(g)
    adj = g.adjacency
    deg = [len(a) for a in adj]
    color = [-1] * n
    uncolored_nbrs = deg[:]
    tracker = _Budget(budget)
    allowed = [tuple(sorted(lists[v])) for v in range(n)]

    def neighborhood_bichromatic(v: int) -> bool:
        first = color[adj[v][0]]
        return any(color[u] != first for u in adj[v][1:])

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        used = {color[u] for u in adj[v] if color[u] >= 0}
        for c in allowed[v]:
            if c in used:
                continue
            tracker.tick()
            color[v] = c
            ok = True
            for u in adj[v]:
                uncolored_nbrs[u] -= 1
            for u in adj[v]:
                if (
                    uncolored_nbrs[u] == 0
                    and deg[u] >= 2
                    and not neighborhood_bichromatic(u)
                ):
                    ok = False
                    break
            if ok and rec(i + 1):
                return True
            for u in adj[v]:
                uncolored_nbrs[u] += 1
            color[v] = -1
        return False

    if not rec(0):
        return None
    palette = max((max(l, default=0) for l in allowed), default=0) + 1
    return Coloring.total(color, palette)


def hypergraph_2color_exact(
    h: Hypergraph, budget: Optional[int] = None
) -> Optional[Coloring]:
    """A 2-coloring with no monochromatic hyperedge, or a certified None.

    Search fixes the color of the first vertex (swapping the two colors is
    an automorphism of the constraint) and prunes a branch the moment an
    edge is fully colored in one color.
    """
    n = h.n
    if h.edge_count == 0:
        return Coloring((0,) * n, 2)
    hdeg = h.vertex_degrees()
    order = sorted(range(n), key=lambda v: (-hdeg[v], v))
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, f in enumerate(h.edges):
        for v in f:
            incident[v].append(i)
    remaining = [len(f) for f in h.edges]
    color = [-1] * n
    tracker = _Budget(budget)
    edges = h.edges

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for c in (0,) if i == 0 else (0, 1):
            tracker.tick()
            color[v] = c
            for ei in incident[v]:
                remaining[ei] -= 1
            ok = True
            for ei in incident[v]:
                if remaining[ei] == 0 and len({color[u] for u in edges[ei]}) == 1:
                    ok = False
                    break
            if ok and rec(i + 1):
                return True
            for ei in incident[v]:
                remaining[ei] += 1
            color[v] = -1
        return False

    return Coloring.total(color, 2) if rec(0) else None


def is_k_critical(g: Graph, budget: Optional[int] = None) -> bool:
    """Whether chi drops on every single-vertex deletion (with k = chi(g)).

    Deleting single vertices suffices: chi is monotone under taking
    induced subgraphs, so if every one-vertex deletion lowers it, every
    proper induced subgraph does too.
    """
    if not is_connected(g):
        raise ValueError("criticality is only defined here for connected graphs")
    base = chromatic_number(g, budget)
    if base.exhausted:
        raise SearchBudgetExceeded("budget exhausted on chi(g)", base.nodes_explored)
    k = base.value
    for v in range(g.n):
        sub, _ = induced_subgraph(g, set(range(g.n)) - {v})
        res = chromatic_number(sub, budget)
        if res.exhausted:
            raise SearchBudgetExceeded(
                f"budget exhausted on chi(g - {v})", res.nodes_explored
            )
        if res.value >= k:
            return False
    return True


def exact_double_total_dominating(
    g: Graph, budget: Optional[int] = None
) -> Optional[VertexSubset]:
    """A set T such that every vertex has neighbors both in T and outside
    it, or a certified None.

    Membership in T is exactly a 2-coloring of the neighborhood hypergraph
    with no monochromatic neighborhood, so the search is an exhaustive
    backtracking over memberships with that pruning.  Any vertex of degree
    <= 1 makes the answer None immediately (its neighborhood cannot meet
    both sides).
    """
    if g.n == 0:
        return VertexSubset(frozenset(), 0)
    if g.min_degree <= 1:
        return None
    membership = hypergraph_2color_exact(neighborhood_hypergraph(g), budget)
    if membership is None:
        return None
    return VertexSubset(frozenset(v for v in range(g.n) if membership[v] == 1), g.n)
