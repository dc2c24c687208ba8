"""Constructive avoidance of bad events by targeted resampling.

Each routine starts from an independent random state, repeatedly picks the
lowest-indexed violated event, and re-randomizes exactly that event's
variables until no event is violated or a resample cap is hit.  Runs are
deterministic given the seed; non-convergence within the cap is reported
as "exhausted", never treated as a proof that no solution exists.

The two condition evaluators are exact arithmetic checks of when this
scheme is guaranteed to work (small event probability, few dependencies);
the samplers themselves run regardless and simply report what happened.
"""

from __future__ import annotations

import math
import random
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, Hypergraph, VertexSubset
from .verify import Coloring, ListAssignment

__all__ = [
    "ConditionCheck",
    "LllParams",
    "ResampleLog",
    "DegenerateParamsError",
    "InfeasibleStructureError",
    "lll_condition_hypergraph",
    "lll_condition_list",
    "moser_tardos_2color",
    "find_double_total_dominating",
    "find_balanced_subset",
    "select_sublists",
]

DEFAULT_CAP_PER_EVENT = 1000


class DegenerateParamsError(ValueError):
    """The membership probability is >= 1, so the biased sampling is
    meaningless; build the params with clamp_p=True to run anyway."""


class InfeasibleStructureError(ValueError):
    """The graph contains a vertex whose degree makes the target
    structurally impossible, regardless of randomness."""


@dataclass(frozen=True)
class ConditionCheck:
    """Result of an exact survival-condition evaluation.

    ``margin`` is the left-hand side of the inequality (holds iff <= 1).
    For the list condition, ``threshold`` is the equivalent minimum list
    size m that would satisfy it.
    """

    holds: bool
    margin: float
    threshold: Optional[float] = None


def lll_condition_hypergraph(r1: int, r2: int, delta_h: int) -> ConditionCheck:
    """Check e * r2 * max_degree * (1/2)^(r1 - 1) <= 1 for edge sizes in
    [r1, r2]; when it holds, random 2-coloring with resampling succeeds."""
    if not 2 <= r1 <= r2:
        raise ValueError("need 2 <= r1 <= r2")
    if delta_h < 1:
        raise ValueError("max degree must be at least 1")
    margin = math.e * r2 * delta_h * 0.5 ** (r1 - 1)
    return ConditionCheck(margin <= 1.0, margin)


def lll_condition_list(k: int, l: int, m: int) -> ConditionCheck:
    """Check e * k^2 * m * (l/m)^k <= 1 for l-sublists of m-lists on a
    k-regular graph; equivalently l * (e*l*k^2)^(1/(k-1)) <= m."""
    if k < 2:
        raise ValueError("need k >= 2")
    if not 1 <= l <= m:
        raise ValueError("need 1 <= l <= m")
    margin = math.e * k * k * m * (l / m) ** k
    threshold = l * (math.e * l * k * k) ** (1.0 / (k - 1))
    return ConditionCheck(margin <= 1.0, margin, threshold)


@dataclass(frozen=True)
class LllParams:
    """Parameters of the biased-subset sampler on a k-regular graph.

    ``p`` is the membership probability c' * ln(k) / k; at small k this
    exceeds 1 and the sampler refuses to run unless the params were built
    with clamp_p=True (which caps p at 0.5 and records the fact).  ``lam``
    is the smallest deviation bound lambda with
    3 c' ln(k) (1 + ln 2 + ln(k^2+1)) <= lambda^2, and ``window_nonempty``
    records whether some such lambda also satisfies lambda < c' ln(k); the
    concentration guarantee only kicks in for k large enough that it does.
    """

    c_prime: float
    k: int
    p: float
    p_clamped: bool
    lam: float
    window_nonempty: bool
    seed: int = 0
    max_resamples: Optional[int] = None

    @classmethod
    def for_degree(
        cls,
        k: int,
        c_prime: float = 7.0,
        seed: int = 0,
        max_resamples: Optional[int] = None,
        clamp_p: bool = False,
    ) -> "LllParams":
        if c_prime <= 6:
            raise ValueError("c_prime must exceed 6")
        if k < 2:
            raise ValueError("need degree k >= 2")
        raw_p = c_prime * math.log(k) / k
        clamped = False
        p = raw_p
        if raw_p >= 1.0 and clamp_p:
            warnings.warn(
                f"membership probability {raw_p:.3f} >= 1 at k={k}; clamping to 0.5",
                stacklevel=2,
            )
            p = 0.5
            clamped = True
        lnk = math.log(k)
        lam_sq = 3 * c_prime * lnk * (1 + math.log(2) + math.log(k * k + 1))
        return cls(
            c_prime=c_prime,
            k=k,
            p=p,
            p_clamped=clamped,
            lam=math.sqrt(lam_sq),
            window_nonempty=lam_sq < (c_prime * lnk) ** 2,
            seed=seed,
            max_resamples=max_resamples,
        )

    def to_json_dict(self) -> dict:
        return {
            "c_prime": self.c_prime,
            "k": self.k,
            "p": self.p,
            "p_clamped": self.p_clamped,
            "lambda": self.lam,
            "window_nonempty": self.window_nonempty,
            "seed": self.seed,
            "max_resamples": self.max_resamples,
        }


@dataclass
class ResampleLog:
    """Trace of one resampling run.

    ``triggers`` counts how often each event index was resampled, and
    ``final_state`` is the raw state at exit (also on exhaustion, for
    debugging).  A "success" outcome is only reported after the final
    state violates no event; callers re-verify through the checkers.
    """

    outcome: str
    resample_count: int
    triggers: dict[int, int]
    final_state: object
    seed: int
    max_resamples: int
    params: Optional[dict] = None

    @property
    def success(self) -> bool:
        return self.outcome == "success"

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "resample_count": self.resample_count,
            "triggers": {str(k): v for k, v in sorted(self.triggers.items())},
            "seed": self.seed,
            "max_resamples": self.max_resamples,
            "params": self.params,
        }


def _cap(max_resamples: Optional[int], n_events: int) -> int:
    if max_resamples is not None:
        return max_resamples
    return DEFAULT_CAP_PER_EVENT * max(n_events, 1)


def moser_tardos_2color(
    h: Hypergraph, seed: int = 0, max_resamples: Optional[int] = None
) -> tuple[Optional[Coloring], ResampleLog]:
    """Random 2-coloring with resampling of monochromatic hyperedges.

    Colors every vertex uniformly at random, then repeatedly re-randomizes
    the vertices of the lowest-indexed monochromatic edge.  The default
    cap is 1000 per edge.
    """
    cap = _cap(max_resamples, h.edge_count)
    rng = random.Random(seed)
    color = [rng.randrange(2) for _ in range(h.n)]
    edge_vertices = [tuple(sorted(f)) for f in h.edges]
    triggers: Counter[int] = Counter()
    count = 0
    while True:
        violated = None
        for i, vs in enumerate(edge_vertices):
            first = color[vs[0]]
            if all(color[v] == first for v in vs[1:]):
                violated = i
                break
        if violated is None:
            log = ResampleLog("success", count, dict(triggers), color[:], seed, cap)
            return Coloring.total(color, 2) if h.n else Coloring((), 2), log
        if count >= cap:
            log = ResampleLog("exhausted", count, dict(triggers), color[:], seed, cap)
            return None, log
        count += 1
        triggers[violated] += 1
        for v in edge_vertices[violated]:
            color[v] = rng.randrange(2)


def find_double_total_dominating(
    g: Graph, seed: int = 0, max_resamples: Optional[int] = None
) -> tuple[Optional[VertexSubset], ResampleLog]:
    """Random subset T with every neighborhood meeting both T and its
    complement, found by resampling the neighborhood of any vertex whose
    neighbors all landed on one side.

    A vertex of degree <= 1 makes the target impossible outright, which
    raises InfeasibleStructureError rather than burning the resample cap.
    """
    for v in range(g.n):
        if g.degree(v) <= 1:
            raise InfeasibleStructureError(
                f"vertex {v} has degree {g.degree(v)}; its neighborhood cannot "
                "meet both the subset and its complement"
            )
    cap = _cap(max_resamples, g.n)
    rng = random.Random(seed)
    in_t = [rng.randrange(2) == 1 for _ in range(g.n)]
    triggers: Counter[int] = Counter()
    count = 0

    def violated_at(v: int) -> bool:
        inside = sum(1 for u in g.adjacency[v] if in_t[u])
        return inside == 0 or inside == g.degree(v)

    while True:
        bad = next((v for v in range(g.n) if violated_at(v)), None)
        if bad is None:
            members = frozenset(v for v in range(g.n) if in_t[v])
            log = ResampleLog("success", count, dict(triggers), sorted(members), seed, cap)
            return VertexSubset(members, g.n), log
        if count >= cap:
            state = sorted(v for v in range(g.n) if in_t[v])
            log = ResampleLog("exhausted", count, dict(triggers), state, seed, cap)
            return None, log
        count += 1
        triggers[bad] += 1
        for u in g.adjacency[bad]:
            in_t[u] = rng.randrange(2) == 1


def find_balanced_subset(
    g: Graph, params: LllParams
) -> tuple[Optional[VertexSubset], ResampleLog]:
    """Biased random subset T of a k-regular graph in which every vertex
    has 0 < deg_T(v) < 2 c' ln(k) and at least one neighbor outside T.

    The complement condition is enforced directly in the event (it is not
    implied by the upper bound once 2 c' ln(k) >= k, which happens at desk
    scale).  Membership is sampled with probability params.p; a violating
    vertex has its whole neighborhood re-randomized with the same bias.
    """
    k = g.regular_degree()
    if k is None:
        raise ValueError("graph is not regular")
    if k < 2:
        raise ValueError("need regular degree k >= 2")
    if params.k != k:
        raise ValueError(f"params were built for degree {params.k}, graph has {k}")
    if params.p >= 1.0:
        raise DegenerateParamsError(
            f"membership probability {params.p:.3f} >= 1 at k={k}; "
            "rebuild params with clamp_p=True to run a clamped experiment"
        )
    upper = 2.0 * params.c_prime * math.log(k)
    cap = _cap(params.max_resamples, g.n)
    rng = random.Random(params.seed)
    p = params.p
    in_t = [rng.random() < p for _ in range(g.n)]
    triggers: Counter[int] = Counter()
    count = 0

    def violated_at(v: int) -> bool:
        d = sum(1 for u in g.adjacency[v] if in_t[u])
        return d == 0 or d >= upper or d == k

    while True:
        bad = next((v for v in range(g.n) if violated_at(v)), None)
        if bad is None:
            members = frozenset(v for v in range(g.n) if in_t[v])
            log = ResampleLog(
                "success", count, dict(triggers), sorted(members), params.seed, cap,
                params=params.to_json_dict(),
            )
            return VertexSubset(members, g.n), log
        if count >= cap:
            state = sorted(v for v in range(g.n) if in_t[v])
            log = ResampleLog(
                "exhausted", count, dict(triggers), state, params.seed, cap,
                params=params.to_json_dict(),
            )
            return None, log
        count += 1
        triggers[bad] += 1
        for u in g.adjacency[bad]:
            in_t[u] = rng.random() < p


def select_sublists(
    g: Graph,
    lists: ListAssignment,
    l: int,
    seed: int = 0,
    max_resamples: Optional[int] = None,
) -> tuple[Optional[ListAssignment], ResampleLog]:
    """Shrink every m-list to an l-sublist so that no vertex's neighbors
    share a common allowed color.

    Draws each sublist uniformly; a vertex whose neighbors' sublists still
    intersect has all its neighbors' sublists re-drawn.  Once the
    intersection over every neighborhood is empty, any proper coloring
    from the sublists is automatically dynamic.
    """
    k = g.regular_degree()
    if k is None or k < 1:
        raise ValueError("graph must be regular with degree >= 1")
    if len(lists) != g.n:
        raise ValueError("list assignment must cover all vertices")
    m = lists.uniform_size()
    if m is None:
        raise ValueError("all lists must have one common size")
    if not 1 <= l <= m:
        raise ValueError(f"need 1 <= l <= m, got l={l}, m={m}")
    pool = [tuple(sorted(lists[v])) for v in range(g.n)]
    cap = _cap(max_resamples, g.n)
    rng = random.Random(seed)
    sub = [frozenset(rng.sample(pool[v], l)) for v in range(g.n)]
    triggers: Counter[int] = Counter()
    count = 0

    def violated_at(v: int) -> bool:
        nbrs = g.adjacency[v]
        inter = set(sub[nbrs[0]])
        for u in nbrs[1:]:
            inter &= sub[u]
            if not inter:
                return False
        return bool(inter)

    while True:
        bad = next((v for v in range(g.n) if violated_at(v)), None)
        if bad is None:
            result = ListAssignment(tuple(sub))
            state = [sorted(s) for s in sub]
            log = ResampleLog("success", count, dict(triggers), state, seed, cap)
            return result, log
        if count >= cap:
            state = [sorted(s) for s in sub]
            log = ResampleLog("exhausted", count, dict(triggers), state, seed, cap)
            return None, log
        count += 1
        triggers[bad] += 1
        for u in g.adjacency[bad]:
            sub[u] = frozenset(rng.sample(pool[u], l))
