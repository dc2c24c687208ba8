"""Assembling certified dynamic colorings from partitions and products.

Every routine here re-checks its own output through the verify module
before returning it: a construction whose result fails verification is an
internal bug and raises CertificationError (never a silent bad coloring).
Bad *inputs* raise PreconditionError carrying the violation list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import (
    SearchBudgetExceeded,
    chromatic_number,
    greedy_coloring,
    hypergraph_2color_exact,
    is_k_critical,
)
from .graphs import (
    Graph,
    KneserSpec,
    VertexSubset,
    bipartition,
    induced_subgraph,
    is_connected,
    neighborhood_hypergraph,
    vertices_in_triangles,
)
from .lll import LllParams, ResampleLog, find_balanced_subset, moser_tardos_2color
from .verify import (
    Coloring,
    Violation,
    check_domination,
    check_dynamic,
    check_hypergraph_2coloring,
    check_proper,
)

__all__ = [
    "PreconditionError",
    "ConstructionError",
    "CertificationError",
    "compose_disjoint_palettes",
    "product_coloring",
    "partial_product_coloring",
    "kneser_dynamic_coloring",
    "KneserColoringResult",
    "balanced_subset_coloring",
    "BalancedColoringResult",
    "triangle_certificate",
    "TriangleCertificate",
    "BoundRecord",
    "BoundContext",
    "BoundReport",
    "bound_report",
]


class PreconditionError(ValueError):
    """An input failed its contract; ``violations`` lists the evidence."""

    def __init__(self, message: str, violations: Sequence[Violation] = ()):
        self.violations = list(violations)
        if self.violations:
            message = f"{message}: {self.violations}"
        super().__init__(message)


class ConstructionError(RuntimeError):
    """The pipeline could not produce its intermediate structure (for
    example, the resampler exhausted its cap)."""


class CertificationError(RuntimeError):
    """A construction's own output failed verification: an internal bug."""

    def __init__(self, message: str, violations: Sequence[Violation] = ()):
        self.violations = list(violations)
        super().__init__(message)


def _certify_dynamic(g: Graph, c: Coloring, what: str) -> Coloring:
    violations = check_dynamic(g, c)
    if violations:
        raise CertificationError(f"{what} failed its dynamic check", violations)
    return c


# ======================================================================
# Palette compositions
# ======================================================================


def compose_disjoint_palettes(
    g: Graph, t: VertexSubset, c_in: Coloring, c_out: Coloring
) -> Coloring:
    """Glue proper colorings of G[T] and G[V - T] on disjoint palettes.

    When T and its complement both touch every neighborhood, each vertex
    sees one neighbor colored from the inside palette and one from the
    (shifted) outside palette, so the glued coloring is dynamic and uses
    palette(c_in) + palette(c_out) colors.

    ``c_in`` and ``c_out`` are indexed by the induced subgraphs' vertex
    ids, i.e. ascending original-id order on T and on its complement.
    """
    dom = check_domination(g, t, "double_total")
    if dom:
        raise PreconditionError("subset is not double total dominating", dom)
    g_in, map_in = induced_subgraph(g, t)
    g_out, map_out = induced_subgraph(g, t.complement())
    bad = check_proper(g_in, c_in)
    if bad:
        raise PreconditionError("inside coloring is not proper on G[T]", bad)
    bad = check_proper(g_out, c_out)
    if bad:
        raise PreconditionError("outside coloring is not proper on G[V - T]", bad)
    shift = c_in.palette_size
    colors: list[Optional[int]] = [None] * g.n
    for new, old in enumerate(map_in):
        colors[old] = c_in[new]
    for new, old in enumerate(map_out):
        colors[old] = shift + c_out[new]
    combined = Coloring(tuple(colors), shift + c_out.palette_size)
    return _certify_dynamic(g, combined, "disjoint-palette composition")


def product_coloring(g: Graph, c: Coloring, f: Coloring) -> Coloring:
    """Pair a proper coloring with a 2-coloring of the neighborhood
    hypergraph into a dynamic coloring on at most twice the palette.

    Vertex v gets the injective pair code 2*c(v) + f(v).  Properness comes
    from the c component; every vertex of degree >= 2 owns a hyperedge on
    which f is not constant, which forces two distinct neighbor colors.
    Vertices of degree < 2 carry no hyperedge and are exempt anyway.
    """
    bad = check_proper(g, c)
    if bad:
        raise PreconditionError("base coloring is not proper", bad)
    h = neighborhood_hypergraph(g)
    bad = check_hypergraph_2coloring(h, f)
    if bad:
        raise PreconditionError(
            "f is not a valid 2-coloring of the neighborhood hypergraph", bad
        )
    colors = tuple(2 * c[v] + f[v] for v in range(g.n))
    paired = Coloring(colors, 2 * c.palette_size)
    return _certify_dynamic(g, paired, "product coloring")


def partial_product_coloring(
    g: Graph, t: VertexSubset, c_t: Coloring, f: Coloring, c_out: Coloring
) -> Coloring:
    """Pair colors inside a total dominating set, fresh colors outside.

    Vertices of T get 2*c_t + f where f 2-colors the hypergraph of
    neighborhoods fully contained in T; the rest get colors shifted past
    the pair palette.  A vertex whose neighborhood sits inside T sees two
    f-values; any other vertex of degree >= 2 sees both palettes.  Total
    palette: 2*palette(c_t) + palette(c_out).

    ``f`` is indexed like the target-restricted neighborhood hypergraph,
    i.e. by T's members in ascending original-id order (same order as
    ``c_t``); ``c_out`` by the complement's members likewise.
    """
    dom = check_domination(g, t, "total")
    if dom:
        raise PreconditionError("subset is not total dominating", dom)
    g_t, map_t = induced_subgraph(g, t)
    g_out, map_out = induced_subgraph(g, t.complement())
    bad = check_proper(g_t, c_t)
    if bad:
        raise PreconditionError("inside coloring is not proper on G[T]", bad)
    bad = check_proper(g_out, c_out)
    if bad:
        raise PreconditionError("outside coloring is not proper on G[V - T]", bad)
    h_t = neighborhood_hypergraph(g, target=t)
    bad = check_hypergraph_2coloring(h_t, f)
    if bad:
        raise PreconditionError(
            "f is not a valid 2-coloring of the T-restricted neighborhood hypergraph",
            bad,
        )
    pair_palette = 2 * c_t.palette_size
    colors: list[Optional[int]] = [None] * g.n
    for i, old in enumerate(map_t):
        colors[old] = 2 * c_t[i] + f[i]
    for j, old in enumerate(map_out):
        colors[old] = pair_palette + c_out[j]
    combined = Coloring(tuple(colors), pair_palette + c_out.palette_size)
    return _certify_dynamic(g, combined, "partial product coloring")


# ======================================================================
# Family-specific pipelines
# ======================================================================


@dataclass(frozen=True)
class KneserColoringResult:
    """Certified dynamic coloring of a triangle-free Kneser-type graph."""

    spec: KneserSpec
    graph: Graph
    tail_subset: VertexSubset
    coloring: Coloring
    colors_used: int
    max_colors: int           # t + 4
    chromatic_number: int     # m - 2n + 2, by the known formula

    @property
    def gap(self) -> int:
        return self.colors_used - self.chromatic_number


def kneser_dynamic_coloring(
    spec: KneserSpec, budget: int = 200_000, seed: int = 0
) -> KneserColoringResult:
    """Dynamic coloring of the disjointness graph on n-subsets with at
    most t + 4 colors, in the triangle-free regime 2n < m < 3n.

    The tail subset T holds the vertices avoiding {1..t}; it is always
    total dominating, and G[T] pairs each subset with its complement
    inside {t+1..m}, so a BFS 2-coloring shows it bipartite (checked at
    runtime, not assumed).  Outside T the minimum element, shifted to
    0-based, is a proper t-coloring.  The T-restricted neighborhood
    hypergraph is 2-colored by exact search first, with a resampling
    fallback if the search budget runs out.
    """
    t = spec.t
    if not 1 <= t < spec.n:
        raise ValueError(f"need 2n < m < 3n, got m={spec.m}, n={spec.n}")
    g = spec.graph()
    subsets = spec.vertex_subsets()
    tail = VertexSubset(
        frozenset(i for i, a in enumerate(subsets) if min(a) > t), g.n
    )
    g_tail, map_tail = induced_subgraph(g, tail)
    two = bipartition(g_tail)
    if two is None:
        raise CertificationError(
            f"induced graph on the tail subset of KG({spec.m},{spec.n}) is not bipartite"
        )
    c_t = Coloring.total(two, 2)
    comp = tail.complement()
    c_out = Coloring.total(
        [min(subsets[old]) - 1 for old in comp.sorted_members()], t
    )
    h_t = neighborhood_hypergraph(g, target=tail)
    try:
        f = hypergraph_2color_exact(h_t, budget)
        if f is None:
            raise CertificationError(
                "T-restricted neighborhood hypergraph is not 2-colorable"
            )
    except SearchBudgetExceeded:
        f, _ = moser_tardos_2color(h_t, seed=seed)
        if f is None:
            raise ConstructionError(
                "2-coloring of the restricted neighborhood hypergraph: exact "
                "search over budget and resampling exhausted"
            ) from None
    coloring = partial_product_coloring(g, tail, c_t, f, c_out)
    return KneserColoringResult(
        spec=spec,
        graph=g,
        tail_subset=tail,
        coloring=coloring,
        colors_used=coloring.colors_used,
        max_colors=t + 4,
        chromatic_number=t + 2,
    )


@dataclass(frozen=True)
class BalancedColoringResult:
    """Dynamic coloring built from a balanced subset of a regular graph."""

    coloring: Coloring
    subset: VertexSubset
    resample_log: ResampleLog
    color_bound: int  # palette(chi_witness) + floor(2 c' ln k) + 1


def balanced_subset_coloring(
    g: Graph, params: LllParams, chi_witness: Coloring
) -> BalancedColoringResult:
    """Color a k-regular graph with palette(chi_witness) + O(log k) colors.

    A balanced subset T (every vertex with neighbors on both sides and
    inside-degree below 2 c' ln k) bounds the degree of G[T], so a greedy
    pass colors it with at most floor(2 c' ln k) + 1 fresh colors; the
    rest keep their chi_witness colors on a shifted palette.  Every vertex
    then sees both palettes in its neighborhood.
    """
    bad = check_proper(g, chi_witness)
    if bad:
        raise PreconditionError("chi witness is not a proper coloring", bad)
    subset, log = find_balanced_subset(g, params)
    if subset is None:
        raise ConstructionError(
            f"balanced subset unavailable: resampling exhausted after "
            f"{log.resample_count} resamples (seed {log.seed})"
        )
    g_t, map_t = induced_subgraph(g, subset)
    c_t = greedy_coloring(g_t)
    shift = c_t.palette_size
    colors: list[Optional[int]] = [None] * g.n
    for i, old in enumerate(map_t):
        colors[old] = c_t[i]
    for v in range(g.n):
        if colors[v] is None:
            colors[v] = shift + chi_witness[v]
    combined = Coloring(tuple(colors), shift + chi_witness.palette_size)
    _certify_dynamic(g, combined, "balanced subset coloring")
    k = params.k
    bound = chi_witness.palette_size + math.floor(2 * params.c_prime * math.log(k)) + 1
    if combined.palette_size > bound:
        raise CertificationError(
            f"palette {combined.palette_size} exceeds the bound {bound}"
        )
    return BalancedColoringResult(combined, subset, log, bound)


# ======================================================================
# Certificates and bound reports
# ======================================================================


@dataclass(frozen=True)
class TriangleCertificate:
    """Whether every vertex lies in a triangle (making any proper coloring
    dynamic); ``uncovered`` lists the vertices outside all triangles."""

    certified: bool
    uncovered: tuple[int, ...]


def triangle_certificate(g: Graph, c: Coloring) -> TriangleCertificate:
    """Certify chi_d = chi via triangles, re-checking rather than trusting.

    When every vertex lies in a triangle, its two triangle partners are
    adjacent, hence differently colored under any proper coloring.  The
    implication is still re-verified by running the dynamic check on ``c``.
    """
    bad = check_proper(g, c)
    if bad:
        raise PreconditionError("coloring is not proper", bad)
    covered = vertices_in_triangles(g)
    uncovered = tuple(v for v in range(g.n) if v not in covered)
    certified = not uncovered
    if certified:
        violations = check_dynamic(g, c)
        if violations:
            raise CertificationError(
                "every vertex lies in a triangle yet the proper coloring "
                "failed the dynamic check",
                violations,
            )
    return TriangleCertificate(certified, uncovered)


@dataclass(frozen=True)
class BoundRecord:
    """One upper-bound formula: whether its hypothesis holds here, and its
    value when it does.  ``basis`` notes how any chromatic numbers inside
    the formula were obtained (exact or greedy over-estimate)."""

    name: str
    applicable: bool
    value: Optional[int]
    source: str
    basis: Optional[str] = None


@dataclass(frozen=True)
class BoundContext:
    """Optional precomputed facts that unlock the subset-based bounds."""

    chi: Optional[int] = None
    chi_d: Optional[int] = None
    double_total: Optional[VertexSubset] = None
    total: Optional[VertexSubset] = None
    kneser: Optional[KneserSpec] = None
    critical_k: Optional[int] = None


@dataclass(frozen=True)
class BoundReport:
    records: tuple[BoundRecord, ...]
    graph_summary: dict

    def applicable(self) -> list[BoundRecord]:
        return [r for r in self.records if r.applicable]

    def best(self) -> Optional[int]:
        values = [r.value for r in self.applicable() if r.value is not None]
        return min(values, default=None)

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_summary,
            "bounds": [
                {
                    "name": r.name,
                    "applicable": r.applicable,
                    "value": r.value,
                    "source": r.source,
                    "basis": r.basis,
                }
                for r in self.records
            ],
        }


def _chi_estimate(
    g: Graph,
    known: Optional[int],
    budget: Optional[int],
    exact_limit: int,
) -> tuple[int, str]:
    if known is not None:
        return known, "exact"
    if g.n <= exact_limit:
        res = chromatic_number(g, budget)
        if not res.exhausted:
            return res.value, "exact"
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    return greedy_coloring(g, order).palette_size, "greedy"


def bound_report(
    g: Graph,
    context: Optional[BoundContext] = None,
    budget: Optional[int] = None,
    exact_limit: int = 28,
    criticality_limit: int = 12,
) -> BoundReport:
    """Evaluate the family of dynamic-chromatic upper bounds on one graph.

    Each record carries its applicability predicate's outcome; a bound
    whose hypothesis fails is never claimed.  Chromatic numbers inside
    formulas use context values when given, exact solves up to
    ``exact_limit`` vertices, and greedy over-estimates beyond (greedy
    keeps every formula a valid upper bound).
    """
    ctx = context or BoundContext()
    delta = g.max_degree
    connected = is_connected(g)
    is_c5 = g.n == 5 and g.edge_count == 5 and g.regular_degree() == 2 and connected
    doubling_ok = g.n > 0 and math.e * delta * delta <= 2.0 ** (g.min_degree - 1)

    records: list[BoundRecord] = []
    high = connected and delta >= 4
    records.append(
        BoundRecord(
            "max_degree_plus_one",
            high,
            delta + 1 if high else None,
            "Δ+1 for connected graphs with Δ ≥ 4",
        )
    )
    low = connected and g.n > 0 and delta <= 3 and not is_c5
    records.append(
        BoundRecord(
            "low_max_degree",
            low,
            4 if low else None,
            "4 for connected graphs with Δ ≤ 3, the 5-cycle excepted",
        )
    )
    records.append(
        BoundRecord(
            "five_cycle_exact",
            is_c5,
            5 if is_c5 else None,
            "the 5-cycle needs exactly 5 colors",
        )
    )

    chi = None
    chi_basis = None
    if doubling_ok:
        chi, chi_basis = _chi_estimate(g, ctx.chi, budget, exact_limit)
    records.append(
        BoundRecord(
            "neighborhood_two_coloring",
            doubling_ok,
            2 * chi if doubling_ok else None,
            "2χ when e·Δ² ≤ 2^(δ−1)",
            chi_basis,
        )
    )

    if ctx.double_total is not None and not check_domination(g, ctx.double_total):
        g_in, _ = induced_subgraph(g, ctx.double_total)
        g_out, _ = induced_subgraph(g, ctx.double_total.complement())
        chi_in, b_in = _chi_estimate(g_in, None, budget, exact_limit)
        chi_out, b_out = _chi_estimate(g_out, None, budget, exact_limit)
        records.append(
            BoundRecord(
                "double_total_split",
                True,
                chi_out + chi_in,
                "χ(G[V−T]) + χ(G[T]) for a double total dominating T",
                f"{b_out}/{b_in}",
            )
        )
    else:
        records.append(
            BoundRecord(
                "double_total_split",
                False,
                None,
                "χ(G[V−T]) + χ(G[T]) for a double total dominating T",
            )
        )

    total_ok = (
        ctx.total is not None
        and doubling_ok
        and not check_domination(g, ctx.total, "total")
    )
    if total_ok:
        g_in, _ = induced_subgraph(g, ctx.total)
        g_out, _ = induced_subgraph(g, ctx.total.complement())
        chi_in, b_in = _chi_estimate(g_in, None, budget, exact_limit)
        chi_out, b_out = _chi_estimate(g_out, None, budget, exact_limit)
        records.append(
            BoundRecord(
                "total_split_doubled",
                True,
                chi_out + 2 * chi_in,
                "χ(G[V−T]) + 2χ(G[T]) for a total dominating T under e·Δ² ≤ 2^(δ−1)",
                f"{b_out}/{b_in}",
            )
        )
    else:
        records.append(
            BoundRecord(
                "total_split_doubled",
                False,
                None,
                "χ(G[V−T]) + 2χ(G[T]) for a total dominating T under e·Δ² ≤ 2^(δ−1)",
            )
        )

    kneser_ok = ctx.kneser is not None and 1 <= ctx.kneser.t < ctx.kneser.n
    records.append(
        BoundRecord(
            "kneser_partition",
            kneser_ok,
            ctx.kneser.t + 4 if kneser_ok else None,
            "t+4 for the disjointness graph with 2n < m < 3n",
        )
    )

    critical_k = ctx.critical_k
    critical_basis = "context" if critical_k is not None else None
    if critical_k is None and doubling_ok and connected and 0 < g.n <= criticality_limit:
        try:
            if is_k_critical(g, budget):
                critical_k = chromatic_number(g, budget).value
                critical_basis = "computed"
        except SearchBudgetExceeded:
            critical_k = None
    crit_ok = critical_k is not None and doubling_ok and critical_k >= 2
    records.append(
        BoundRecord(
            "critical_doubling",
            crit_ok,
            2 * critical_k - 2 if crit_ok else None,
            "2k−2 for k-critical graphs under e·Δ² ≤ 2^(δ−1)",
            critical_basis if crit_ok else None,
        )
    )

    summary = {
        "n": g.n,
        "edges": g.edge_count,
        "max_degree": delta,
        "min_degree": g.min_degree,
        "connected": connected,
    }
    return BoundReport(tuple(records), summary)
