"""Greedy routing: sector-based generalized greedy and Euclidean greedy.

The sector strategy is memoryless and local: a step at u looks only at
u's coordinates, its neighbors' coordinates, the destination's
coordinates, and u's saturated entries.  Progress is measured by the
hexagonal distance h(u, t) = max_i |t_i - u_i|, which on the fixed-sum
coordinate plane equals half the L1 distance.  The rule is tiered:

    (i)   the destination is a neighbor: deliver;
    (ii)  classify the destination's sector j relative to u;
    (iii) j odd: forward to the saturated entry of that sector (this
          always strictly decreases h);
    (iv)  j even: keep whichever of the two adjacent odd sectors'
          entries strictly decrease h.  Both: forward to the one that
          overshoots the destination in fewer coordinates (relative to
          u's signs), ties to the lower tree.  One: forward to it.
          Neither: widen to the full neighborhood and forward to the
          neighbor minimizing h, ties to the lowest vertex id;
    (v)   at a corner (no saturated entries) forward to the neighbor
          whose order relations to the destination disagree with u's in
          the fewest coordinates, ties to the lowest vertex id.

Every tier strictly decreases h, so a sector route can never revisit a
vertex; delivery follows because h is a nonnegative integer that only
vanishes at the destination.  The Euclidean strategy forwards to the
strictly closest neighbor by exact squared distance and gets stuck in
local minima.  Loop detection in ``route`` is harness instrumentation
only; the rules themselves keep no state.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

from .drawing import CartesianPlacement, Drawing
from .sectors import SaturatedGraph, classify_sector
from .triangulation import Triangulation


class Strategy(enum.Enum):
    SECTOR = "sector"
    EUCLIDEAN = "euclidean"


class Outcome(enum.Enum):
    DELIVERED = "delivered"
    STUCK = "stuck"
    LOOP_DETECTED = "loop"
    HOP_BUDGET_EXCEEDED = "budget"


def hex_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """max_i |b_i - a_i|; the hexagonal metric on the fixed-sum plane."""
    return max(
        abs(int(b[0]) - int(a[0])),
        abs(int(b[1]) - int(a[1])),
        abs(int(b[2]) - int(a[2])),
    )


@dataclass(frozen=True)
class Decision:
    """One forwarding choice: where we stood, what we saw, where we went."""

    at: int
    tier: str
    sector: int | None
    boundary: bool
    chosen: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "at": self.at,
            "tier": self.tier,
            "sector": self.sector,
            "boundary": self.boundary,
            "chosen": self.chosen,
        }


@dataclass
class RouteTrace:
    source: int
    destination: int
    strategy: Strategy
    outcome: Outcome
    path: list[int]
    decisions: list[Decision] = field(default_factory=list)
    reason: str = ""

    @property
    def hops(self) -> int:
        return len(self.path) - 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "destination": self.destination,
            "strategy": self.strategy.value,
            "outcome": self.outcome.value,
            "hops": self.hops,
            "path": list(self.path),
            "decisions": [d.to_dict() for d in self.decisions],
            "reason": self.reason,
        }


def _overshoot(t_signs: tuple[int, int, int], v: tuple[int, int, int], t: tuple[int, int, int]) -> int:
    """In how many coordinates does v lie beyond t, judged from u's side."""
    count = 0
    for c in range(3):
        s = t_signs[c]
        if s and ((t[c] > v[c]) - (t[c] < v[c])) == -s:
            count += 1
    return count


def next_hop_sector(
    u: int, t: int, tri: Triangulation, drawing: Drawing, sat: SaturatedGraph
) -> tuple[int | None, Decision]:
    """One sector-greedy step.

    Returns a strictly h-closer vertex.  None signals that the widened
    scan found no strictly closer neighbor, which would falsify the
    delivery argument; it is reported as a Stuck route, not an error.
    """
    if u == t:
        raise ValueError("next hop undefined at the destination itself")
    coords = drawing.coords
    if tri.adjacent(u, t):
        return t, Decision(u, "neighbor", None, False, t)
    if u < 3:
        cu = coords[u]
        ct = coords[t]
        su = tuple((ct[c] > cu[c]) - (ct[c] < cu[c]) for c in range(3))
        best, best_score = -1, 4
        for w in tri.neighbors(u):
            cw = coords[w]
            score = sum(((ct[c] > cw[c]) - (ct[c] < cw[c])) != su[c] for c in range(3))
            if score < best_score or (score == best_score and w < best):
                best, best_score = w, score
        return best, Decision(u, "corner", None, False, best)
    sector, boundary = classify_sector(coords[u], coords[t])
    if sector % 2:
        v = sat.sat(u, (sector + 1) // 2)
        return v, Decision(u, "odd", sector, boundary, v)
    i = sector // 2
    trees = (i, i % 3 + 1)
    cands = tuple(sat.sat(u, k) for k in trees)
    hu = hex_distance(coords[u], coords[t])
    decreasing = [v for v in cands if hex_distance(coords[v], coords[t]) < hu]
    if not decreasing:
        best, best_h = -1, hu
        for w in tri.neighbors(u):
            hw = hex_distance(coords[w], coords[t])
            if hw < best_h or (hw == best_h and 0 <= best and w < best):
                best, best_h = w, hw
        if best < 0:
            return None, Decision(u, "even-scan", sector, boundary, -1)
        return best, Decision(u, "even-scan", sector, boundary, best)
    if len(decreasing) == 1:
        v = decreasing[0]
        return v, Decision(u, "even", sector, boundary, v)
    t_signs = tuple((coords[t][c] > coords[u][c]) - (coords[t][c] < coords[u][c]) for c in range(3))
    scores = tuple(_overshoot(t_signs, coords[v], coords[t]) for v in cands)
    pick = 0 if scores[0] <= scores[1] else 1  # tie goes to the lower tree index
    v = cands[pick]
    return v, Decision(u, "even", sector, boundary, v)


def next_hop_euclidean(
    u: int, t: int, tri: Triangulation, placement: CartesianPlacement
) -> tuple[int | None, Decision]:
    """Strictly closest neighbor to t, or None at a local minimum."""
    if u == t:
        raise ValueError("next hop undefined at the destination itself")
    best, best_d2 = -1, placement.squared_distance_scaled(u, t)
    for w in tri.neighbors(u):
        d2 = placement.squared_distance_scaled(w, t)
        if d2 < best_d2:
            best, best_d2 = w, d2
    if best < 0:
        return None, Decision(u, "closest", None, False, -1)
    return best, Decision(u, "closest", None, False, best)


def route(
    tri: Triangulation,
    drawing: Drawing,
    s: int,
    t: int,
    strategy: Strategy = Strategy.SECTOR,
    sat: SaturatedGraph | None = None,
    placement: CartesianPlacement | None = None,
    max_hops: int | None = None,
) -> RouteTrace:
    """Forward greedily from s until delivery or a reportable failure."""
    if s == t:
        raise ValueError("route requires distinct source and destination")
    if max_hops is None:
        max_hops = tri.n
    if max_hops < 1:
        raise ValueError(f"need max_hops >= 1, got {max_hops}")
    if strategy is Strategy.SECTOR and sat is None:
        from .sectors import extract_saturated

        sat = extract_saturated(tri, drawing)
    if strategy is Strategy.EUCLIDEAN and placement is None:
        from .drawing import to_cartesian

        placement = to_cartesian(drawing)

    trace = RouteTrace(s, t, strategy, Outcome.STUCK, [s])
    visited = {s}
    u = s
    while True:
        if strategy is Strategy.SECTOR:
            v, decision = next_hop_sector(u, t, tri, drawing, sat)
        else:
            v, decision = next_hop_euclidean(u, t, tri, placement)
        trace.decisions.append(decision)
        if v is None:
            trace.outcome = Outcome.STUCK
            trace.reason = (
                "no neighbor strictly closer in hexagonal distance"
                if strategy is Strategy.SECTOR
                else "local minimum of the Euclidean distance"
            )
            return trace
        trace.path.append(v)
        if v == t:
            trace.outcome = Outcome.DELIVERED
            return trace
        if v in visited:
            trace.outcome = Outcome.LOOP_DETECTED
            trace.reason = f"vertex {v} repeated"
            return trace
        visited.add(v)
        if trace.hops >= max_hops:
            trace.outcome = Outcome.HOP_BUDGET_EXCEEDED
            trace.reason = f"exceeded {max_hops} hops"
            return trace
        u = v


@dataclass
class DeliveryReport:
    """All-pairs routing outcome for one instance."""

    instance: dict[str, Any]
    strategy: Strategy
    pairs: int
    delivered: int
    stuck: int
    looped: int
    budget_exceeded: int
    max_hops: int
    mean_hops: float
    max_stretch: float
    counterexamples: list[RouteTrace]

    @property
    def failed(self) -> int:
        return self.pairs - self.delivered

    @property
    def delivery_rate(self) -> float:
        return 1.0 if self.pairs == 0 else self.delivered / self.pairs

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "strategy": self.strategy.value,
            "pairs": self.pairs,
            "delivered": self.delivered,
            "failed": self.failed,
            "stuck": self.stuck,
            "looped": self.looped,
            "budget_exceeded": self.budget_exceeded,
            "delivery_rate": self.delivery_rate,
            "max_hops": self.max_hops,
            "mean_hops": self.mean_hops,
            "max_stretch": self.max_stretch,
            "counterexamples": [
                tr.to_dict()
                for tr in sorted(self.counterexamples, key=lambda tr: (tr.source, tr.destination))
            ],
        }


def verify_all_pairs(
    tri: Triangulation,
    drawing: Drawing,
    strategy: Strategy = Strategy.SECTOR,
    sat: SaturatedGraph | None = None,
    max_hops: int | None = None,
    instance: dict[str, Any] | None = None,
    backend: str | None = None,
) -> DeliveryReport:
    """Route every ordered pair and fold the outcomes into a report.

    The heavy loop runs in the selected kernel backend; failing pairs
    are re-routed through the scalar reference to get full traces.
    """
    from . import kernels
    from .drawing import to_cartesian
    from .sectors import extract_saturated

    if max_hops is None:
        max_hops = tri.n
    if strategy is Strategy.SECTOR and sat is None:
        sat = extract_saturated(tri, drawing)
    placement = to_cartesian(drawing)

    n = tri.n
    outcomes, hops = kernels.all_pairs(tri, drawing, sat, strategy, max_hops, backend=backend)
    dist = kernels.bfs_all_pairs(tri, backend=backend)

    delivered = stuck = looped = budget = 0
    max_h = 0
    total_h = 0
    best_num, best_den = 0, 1
    failures: list[tuple[int, int]] = []
    for s in range(n):
        row = s * n
        for t in range(n):
            if s == t:
                continue
            out = outcomes[row + t]
            if out == kernels.DELIVERED:
                delivered += 1
                h = int(hops[row + t])
                total_h += h
                max_h = max(max_h, h)
                d = int(dist[row + t])
                if h * best_den > best_num * d:
                    best_num, best_den = h, d
            elif out == kernels.STUCK:
                stuck += 1
                failures.append((s, t))
            elif out == kernels.LOOP:
                looped += 1
                failures.append((s, t))
            else:
                budget += 1
                failures.append((s, t))
    counterexamples = [
        route(tri, drawing, s, t, strategy, sat=sat, placement=placement, max_hops=max_hops)
        for s, t in failures
    ]
    pairs = n * (n - 1)
    return DeliveryReport(
        instance=dict(instance or {"n": n}),
        strategy=strategy,
        pairs=pairs,
        delivered=delivered,
        stuck=stuck,
        looped=looped,
        budget_exceeded=budget,
        max_hops=max_h,
        mean_hops=(total_h / delivered) if delivered else 0.0,
        max_stretch=(best_num / best_den) if delivered else 0.0,
        counterexamples=counterexamples,
    )


@dataclass
class ComparisonReport:
    """Side-by-side delivery statistics for both strategies."""

    rows: list[dict[str, Any]]

    def aggregate(self) -> dict[str, dict[str, Any]]:
        agg: dict[str, dict[str, Any]] = {}
        for strategy in Strategy:
            rows = [r for r in self.rows if r["strategy"] == strategy.value]
            if not rows:
                continue
            pairs = sum(r["pairs"] for r in rows)
            delivered = sum(r["delivered"] for r in rows)
            agg[strategy.value] = {
                "instances": len(rows),
                "pairs": pairs,
                "delivered": delivered,
                "delivery_rate": 1.0 if pairs == 0 else delivered / pairs,
                "max_hops": max(r["max_hops"] for r in rows),
                "max_stretch": max(r["max_stretch"] for r in rows),
            }
        return agg

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": sorted(self.rows, key=lambda r: (r["instance"].get("n", 0), r["instance"].get("seed", 0), r["strategy"])),
            "aggregate": self.aggregate(),
        }


def compare_strategies(
    instances: Sequence[tuple[dict[str, Any], Triangulation, Drawing]],
    max_hops: int | None = None,
    backend: str | None = None,
) -> ComparisonReport:
    """Run both strategies over the given instances; rows keep counts only."""
    rows = []
    for descriptor, tri, drawing in instances:
        for strategy in Strategy:
            report = verify_all_pairs(
                tri, drawing, strategy, max_hops=max_hops, instance=descriptor, backend=backend
            )
            row = report.to_dict()
            row["counterexamples"] = len(report.counterexamples)
            rows.append(row)
    return ComparisonReport(rows)
