"""The HICOM team-construction heuristic and its runtime verification.

The run grows a ball of shells around a central vertex, extends it one
vertex per outer shell until the induced diameter hits the target
d1 = ceil(diam(G)/l), then repairs the less-dispersiveness condition by
removing vertices. Every successful run is re-checked against the full
team criteria before it is returned; a run that cannot reach a verdict
raises instead of returning a weaker team.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .criteria import (
    SubsetEvaluator,
    TeamCandidate,
    TeamReport,
    as_fraction,
    check_hc,
    domination_radius,
    induced_metrics,
)
from .graphs import Graph, eccentricity_profile, graph_digest


class HicomError(Exception):
    """A run could not produce a valid team; CLI maps this to 'infeasible'."""


class DegenerateParams(HicomError):
    """The requested target allows no diameter reduction (d1 >= diam or < 1)."""


class RepairFailed(HicomError):
    """Step-7 removals cannot restore the team conditions."""

    def __init__(self, message: str, candidate: frozenset[int]):
        super().__init__(message)
        self.candidate = candidate


class NoFeasibleTeam(HicomError):
    """No extension or fallback produces a team meeting every condition."""

    def __init__(self, message: str, candidate: frozenset[int] | None = None):
        super().__init__(message)
        self.candidate = candidate


@dataclass(frozen=True)
class HcParams:
    """Validated run parameters: the factor l and the diameter target d1."""

    l: Fraction
    d1: int
    start_vertex_override: int | None = None

    @classmethod
    def for_graph(cls, g: Graph, l, start: int | None = None, allow_large_l: bool = False):
        frac = _validate_l(l, allow_large_l)
        diam = eccentricity_profile(g).diameter
        d1 = math.ceil(Fraction(diam) / frac)
        if d1 < 1 or d1 >= diam:
            raise DegenerateParams(
                f"degenerate params: d1={d1} with diam(G)={diam} requests no reduction"
            )
        return cls(l=frac, d1=d1, start_vertex_override=start)


@dataclass(frozen=True)
class TraceStep:
    """One replayable phase event. Ops 'ball', 'extend' and 'fallback' add
    their vertices, 'repair' removes, the rest are markers."""

    op: str  # ball | extend | exhausted | unreached | repair | fallback
    shell: int | None
    vertices: tuple[int, ...]

    def to_json_dict(self, labels=None) -> dict:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        return {
            "op": self.op,
            "shell": self.shell,
            "vertices": [name(v) for v in self.vertices],
        }


@dataclass(frozen=True)
class BoundCheck:
    """Evaluation record for one proved inequality lhs <= rhs."""

    name: str
    lhs: float
    rhs: float
    holds: bool
    context: str

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "context": self.context,
        }


@dataclass(frozen=True)
class HicomResult:
    """Output team plus the run's parameters, metrics and phase trace.

    ``construction_k`` and ``construction_diameter`` describe the candidate
    at the end of the growth phase, before any repair removals; they equal
    ``k`` and ``achieved_diameter`` on runs that needed no repair. The
    accessibility bound k <= r(G) - x governs the construction: removals
    can only grow the domination radius.
    """

    team: TeamCandidate
    l: Fraction
    d1: int
    achieved_diameter: int
    k: int
    x: int
    construction_k: int
    construction_diameter: int
    start_vertex: int | None
    trace: tuple[TraceStep, ...]
    report: TeamReport

    def to_json_dict(self, labels=None) -> dict:
        return {
            "team": [self.team.host.labels[v] for v in sorted(self.team.members)],
            "team_size": len(self.team.members),
            "l": str(self.l),
            "d1": self.d1,
            "achieved_diameter": self.achieved_diameter,
            "k": self.k,
            "x": self.x,
            "construction_k": self.construction_k,
            "construction_diameter": self.construction_diameter,
            "start": None if self.start_vertex is None else self.team.host.labels[self.start_vertex],
            "trace": [step.to_json_dict(self.team.host.labels) for step in self.trace],
            "report": self.report.to_json_dict(self.team.host.labels),
        }


def _validate_l(l, allow_large_l: bool) -> Fraction:
    frac = as_fraction(l)
    if frac <= 1:
        raise ValueError(f"reduction factor l must be > 1, got {frac}")
    if frac > 2 and not allow_large_l:
        raise ValueError(
            f"l={frac} > 2 shrinks teams sharply and often leaves none; "
            "pass allow_large_l=True to force it"
        )
    if frac > Fraction(3, 2):
        warnings.warn(
            f"l={frac} > 3/2: an l-HC team is not guaranteed to exist",
            stacklevel=3,
        )
    return frac


def replay_trace(g: Graph, trace: Iterable[TraceStep]) -> frozenset[int]:
    """Re-apply a phase trace; returns the reconstructed team."""
    members: set[int] = set()
    for step in trace:
        if step.op in ("ball", "extend", "fallback"):
            members.update(step.vertices)
        elif step.op == "repair":
            members.difference_update(step.vertices)
    return frozenset(members)


def extend_step(g: Graph, v: int, members: frozenset[int], i: int, d1: int) -> int | None:
    """Pick the shell-i vertex whose addition pushes the induced diameter
    up fastest without overshooting d1 or disconnecting the team; ties
    break to the lowest index. None when the shell offers no usable vertex.

    Candidates are ranked by the eccentricity the new vertex would take
    inside the grown team (one BFS each). That eccentricity is a lower
    bound on the grown diameter, and existing pair distances can only
    shrink when a vertex is added, so a candidate within d1 never
    overshoots: the grown diameter is max(new eccentricity, old pairs).
    """
    row = g.distances()[v]
    shell_i = [u for u in range(g.n) if int(row[u]) == i and u not in members]
    best_vertex = None
    best_ecc = -1
    for u in shell_i:
        grown = members | {u}
        dist = {u: 0}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            dw = dist[w]
            for nbr in g.adj[w]:
                if nbr in grown and nbr not in dist:
                    dist[nbr] = dw + 1
                    queue.append(nbr)
        if len(dist) < len(grown):
            continue  # u does not attach to the team
        new_ecc = max(dist.values())
        if new_ecc > d1:
            continue
        if new_ecc > best_ecc:
            best_ecc = new_ecc
            best_vertex = u
    return best_vertex


#: Exhaustive repair scans 2^|D1| subsets; beyond this size only the greedy
#: phase runs.
EXHAUSTIVE_REPAIR_LIMIT = 18


def _greedy_repair(g: Graph, current: frozenset[int], d1: int) -> frozenset[int] | None:
    """Remove one vertex at a time until every member drops its whole-graph
    eccentricity. A removal must keep the team connected, the induced
    diameter within d1, and the domination radius within the induced
    diameter; candidates are ranked by the radius they leave behind, then
    by how many violators remain, then by index. Removals are not limited
    to the violators themselves: shedding a violator's far teammate is
    often what lowers its eccentricity."""
    host_ecc = g.distances().max(axis=1)
    for _ in range(len(current)):
        _, _, ind_ecc = induced_metrics(g, current)
        violators = [v for v in sorted(current) if ind_ecc[v] >= int(host_ecc[v])]
        if not violators:
            return current
        if len(current) == 1:
            return None
        if len(current) > EXHAUSTIVE_REPAIR_LIMIT and len(violators) > 1:
            # large candidates: shedding every violator at once usually lands
            # directly on a valid core and skips the quadratic rescan rounds
            bulk = current - set(violators)
            if bulk:
                connected, diam_after, _ = induced_metrics(g, bulk)
                if connected and diam_after <= d1:
                    k_after = domination_radius(g, bulk)
                    if k_after <= diam_after:
                        current = bulk
                        continue
        best = None  # ((k_after, violators_after, vertex), shrunk team)
        for v in sorted(current):
            shrunk = current - {v}
            connected, diam_after, ecc_after = induced_metrics(g, shrunk)
            if not connected or diam_after > d1:
                continue
            k_after = domination_radius(g, shrunk)
            if k_after > diam_after:
                continue
            viol_after = sum(1 for w in shrunk if ecc_after[w] >= int(host_ecc[w]))
            key = (k_after, viol_after, v)
            if best is None or key < best[0]:
                best = (key, shrunk)
        if best is None:
            return None
        current = best[1]
    return None


def _exhaustive_repair(g: Graph, members: frozenset[int], d1: int) -> frozenset[int] | None:
    """Fallback when the greedy walk dead-ends: scan subsets of the
    candidate largest-first for one meeting every condition. Bounded by
    EXHAUSTIVE_REPAIR_LIMIT; order is deterministic."""
    if len(members) > EXHAUSTIVE_REPAIR_LIMIT:
        return None
    ev = SubsetEvaluator(g)
    pool = sorted(members)
    for size in range(len(pool) - 1, 0, -1):
        for subset in combinations(pool, size):
            connected, diameter, less, k = ev.profile(subset)
            if connected and less and diameter <= d1 and k <= diameter:
                return frozenset(subset)
    return None


def repair(g: Graph, members: Iterable[int], params: HcParams) -> TeamCandidate:
    """Step-7 removal phase: shed vertices until the team is less dispersive
    while holding the diameter and accessibility conditions.

    A greedy one-at-a-time walk runs first; if it dead-ends, a bounded
    exhaustive scan over subsets of the candidate takes over. Raises
    ``RepairFailed`` (stuck candidate attached) when neither finds a team.
    """
    current = members.members if isinstance(members, TeamCandidate) else frozenset(members)
    repaired = _greedy_repair(g, current, params.d1)
    if repaired is None:
        repaired = _exhaustive_repair(g, current, params.d1)
    if repaired is None:
        raise RepairFailed(
            "repair failed: no removal restores less-dispersiveness within the "
            "diameter and accessibility conditions",
            candidate=current,
        )
    return TeamCandidate(g, repaired)


def _repair_with_trace(g, members, params, trace):
    before = frozenset(members)
    team = repair(g, before, params)
    removed = sorted(before - team.members)
    for v in removed:
        trace.append(TraceStep("repair", None, (v,)))
    return team.members


def small_diameter_fallback(g: Graph) -> TeamCandidate | None:
    """Dominating-clique search for graphs of diameter <= 2.

    Exhaustive (smallest clique first, lexicographic ties) up to n = 20,
    greedy beyond. Returns None when no dominating clique exists; low
    diameter leaves no room for an ordinary run to reduce anything.
    """
    prof = eccentricity_profile(g)
    if prof.diameter > 2:
        raise ValueError(f"fallback applies to diameter <= 2, got {prof.diameter}")
    if g.n == 1:
        return TeamCandidate(g, frozenset({0}))

    adjsets = [set(nbrs) for nbrs in g.adj]

    def dominates(clique: tuple[int, ...]) -> bool:
        covered = set(clique)
        for v in clique:
            covered |= adjsets[v]
        return len(covered) == g.n

    if g.n <= 20:
        level: list[tuple[int, ...]] = [(v,) for v in range(g.n)]
        while level:
            for clique in level:
                if dominates(clique):
                    return TeamCandidate(g, frozenset(clique))
            nxt = []
            for clique in level:
                common = set(range(clique[-1] + 1, g.n))
                for v in clique:
                    common &= adjsets[v]
                nxt.extend(clique + (u,) for u in sorted(common))
            level = nxt
        return None

    # greedy: grow a clique inside the common neighborhood, maximizing coverage
    start = max(range(g.n), key=lambda v: (len(adjsets[v]), -v))
    clique = [start]
    covered = {start} | adjsets[start]
    while len(covered) < g.n:
        common = set(range(g.n))
        for v in clique:
            common &= adjsets[v]
        common -= set(clique)
        if not common:
            return None
        gain = {u: len(adjsets[u] - covered) for u in common}
        u = max(sorted(common), key=lambda w: (gain[w], -w))
        clique.append(u)
        covered |= {u} | adjsets[u]
    return TeamCandidate(g, frozenset(clique))


def hicom(
    g: Graph,
    l,
    start: int | None = None,
    allow_large_l: bool = False,
) -> HicomResult:
    """Run the full heuristic; returns a result whose report verdict is
    l-HC, or raises a ``HicomError`` describing why no team was produced.

    Graphs of diameter <= 2 route to the dominating-clique fallback with
    l = 2 semantics. The start override, when given, must be a central
    vertex (the correctness bound leans on e(start) = r(G)).
    """
    if not g.is_connected():
        raise ValueError("hicom requires a connected graph")
    _validate_l(l, allow_large_l)
    prof = eccentricity_profile(g)

    if prof.diameter <= 2:
        team = small_diameter_fallback(g)
        if team is None:
            raise NoFeasibleTeam("no l-HC team; graph diameter <= 2 and no dominating clique")
        report = check_hc(g, team.members, Fraction(2))
        if not report.is_hc:
            raise NoFeasibleTeam(
                "no l-HC team; graph diameter <= 2 and the dominating clique "
                "fails the team conditions",
                candidate=team.members,
            )
        d1 = report.bc_target
        return HicomResult(
            team=team,
            l=Fraction(2),
            d1=d1,
            achieved_diameter=report.induced_diameter,
            k=report.domination_radius,
            x=d1 // 2,
            construction_k=report.domination_radius,
            construction_diameter=report.induced_diameter,
            start_vertex=None,
            trace=(TraceStep("fallback", None, tuple(sorted(team.members))),),
            report=report,
        )

    params = HcParams.for_graph(g, l, start=start, allow_large_l=allow_large_l)

    if start is not None:
        if start not in prof.center:
            raise ValueError(
                f"start vertex {start} is not central (eccentricity "
                f"{prof.eccentricity[start]} != radius {prof.radius})"
            )
        starts = (start,)
    else:
        # ties among central vertices may be broken arbitrarily, so a run
        # that fails from one center legitimately retries from the next
        starts = prof.center

    first_error: HicomError | None = None
    for v in starts:
        try:
            return _attempt(g, prof, params, v)
        except HicomError as exc:
            if first_error is None:
                first_error = exc
    assert first_error is not None
    if len(starts) > 1:
        raise NoFeasibleTeam(
            f"no {params.l}-HC team from any of {len(starts)} central starts; "
            f"first failure: {first_error}",
            candidate=getattr(first_error, "candidate", None),
        )
    raise first_error


def _attempt(g: Graph, prof, params: HcParams, v: int) -> HicomResult:
    """One run from a fixed central start: ball, extension, repair, check."""
    d1 = params.d1
    x = d1 // 2
    dist_row = g.distances()[v]
    trace: list[TraceStep] = []
    members: set[int] = set()
    for j in range(x + 1):
        shell_j = tuple(int(u) for u in range(g.n) if int(dist_row[u]) == j)
        members.update(shell_j)
        trace.append(TraceStep("ball", j, shell_j))

    frozen = frozenset(members)
    _, cur_diam, _ = induced_metrics(g, frozen)
    unreached = False
    i = x
    while cur_diam < d1:
        i += 1
        if i > prof.eccentricity[v]:
            trace.append(TraceStep("unreached", i, ()))
            unreached = True
            break
        u = extend_step(g, v, frozen, i, d1)
        if u is None:
            trace.append(TraceStep("exhausted", i, ()))
            continue
        frozen = frozen | {u}
        trace.append(TraceStep("extend", i, (u,)))
        _, cur_diam, _ = induced_metrics(g, frozen)

    construction_k = domination_radius(g, frozen)
    construction_diameter = cur_diam

    host_ecc = g.distances().max(axis=1)
    _, _, ind_ecc = induced_metrics(g, frozen)
    if any(ind_ecc[w] >= int(host_ecc[w]) for w in frozen):
        frozen = _repair_with_trace(g, frozen, params, trace)

    report = check_hc(g, frozen, params.l)
    if not report.is_hc:
        if unreached:
            raise NoFeasibleTeam(
                f"no extension achieves target diameter {d1}: shells exhausted at "
                f"induced diameter {cur_diam} and the resulting team is not "
                f"{params.l}-HC",
                candidate=frozen,
            )
        raise NoFeasibleTeam(
            f"conditions not met: verdict {report.verdict} "
            f"(k={report.domination_radius}, induced diameter {report.induced_diameter})",
            candidate=frozen,
        )

    return HicomResult(
        team=TeamCandidate(g, frozen),
        l=params.l,
        d1=d1,
        achieved_diameter=report.induced_diameter,
        k=report.domination_radius,
        x=x,
        construction_k=construction_k,
        construction_diameter=construction_diameter,
        start_vertex=v,
        trace=tuple(trace),
        report=report,
    )


def verify_k_bound(result: HicomResult, g: Graph) -> list[BoundCheck]:
    """Evaluate the accessibility bounds against a successful run.

    The proved inequality k <= r(G) - x rests on the grown candidate still
    containing the whole radius-x ball around the start, so the first
    check evaluates it on the construction (pre-repair) radius; it must
    hold on every run. The remaining two evaluate the parity form and its
    relaxed closed form on the finished team; repair removals can breach
    them, since shedding ball vertices pushes outside vertices farther
    from the team.
    """
    prof = eccentricity_profile(g)
    r = prof.radius
    a = result.achieved_diameter
    context = f"{graph_digest(g)} l={result.l} d1={result.d1}"
    checks = [
        BoundCheck(
            name="construction k <= r(G) - x",
            lhs=float(result.construction_k),
            rhs=float(r - result.x),
            holds=result.construction_k <= r - result.x,
            context=context,
        ),
        BoundCheck(
            name="k <= r(G) - x",
            lhs=float(result.k),
            rhs=float(r - a // 2),
            holds=result.k <= r - a // 2,
            context=context,
        ),
    ]
    relaxed_rhs = Fraction(r) - Fraction(a, 2) + Fraction(1, 2)
    checks.append(
        BoundCheck(
            name="k <= r(G) - diam(<D1>)/2 + 1/2",
            lhs=float(result.k),
            rhs=float(relaxed_rhs),
            holds=Fraction(result.k) <= relaxed_rhs,
            context=context,
        )
    )
    return checks


@dataclass(frozen=True)
class FeasibilityPrediction:
    """Prediction of whether a run with l = 2 can reach an HC verdict,
    from the deficit b = 2 r(G) - diam(G) and its parity threshold."""

    radius: int
    diameter: int
    b: int
    threshold: int
    predicted_feasible: bool
    case_label: str

    def to_json_dict(self) -> dict:
        return {
            "radius": self.radius,
            "diameter": self.diameter,
            "b": self.b,
            "threshold": self.threshold,
            "predicted_feasible": self.predicted_feasible,
            "case": self.case_label,
        }


def two_hc_feasibility(g: Graph) -> FeasibilityPrediction:
    """Classify the graph for l = 2 runs.

    b even needs diam >= 2b + 2; b odd needs diam >= 2b - 1. Graphs whose
    deficit grows with the radius (self-centered at the extreme) are
    predicted infeasible. The thresholds are sufficient, not necessary:
    a run may still succeed on a predicted-infeasible graph.
    """
    prof = eccentricity_profile(g)
    b = 2 * prof.radius - prof.diameter
    if b % 2 == 0:
        threshold = 2 * b + 2
        label = f"even b={b}"
    else:
        threshold = 2 * b - 1
        label = f"odd b={b}"
    if b == 0:
        label = "b=0 (diam = 2r)"
    elif b == prof.radius:
        label = f"self-centered (b = r = {b})"
    return FeasibilityPrediction(
        radius=prof.radius,
        diameter=prof.diameter,
        b=b,
        threshold=threshold,
        predicted_feasible=prof.diameter >= threshold,
        case_label=label,
    )


def extend_to_max(g: Graph, result: HicomResult | TeamCandidate, l) -> TeamCandidate:
    """Greedy maximization: keep adding the lowest-index vertex whose
    addition preserves all four HC conditions; stops at a fixpoint."""
    frac = as_fraction(l)
    base = result.team.members if isinstance(result, HicomResult) else result.members
    members = set(base)
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            if u in members:
                continue
            if check_hc(g, members | {u}, frac).is_hc:
                members.add(u)
                changed = True
                break
    return TeamCandidate(g, frozenset(members))


@dataclass(frozen=True)
class DirectSubstitutionRow:
    """One self-centered direct-substitution row: bound value vs target."""

    diameter: int
    d1: int
    x: int
    k_bound: int
    relation: str  # how k_bound compares to d1: '<', '=' or '>'


def self_centered_direct_substitution(diameter: int, l=Fraction(3, 2)) -> DirectSubstitutionRow:
    """Evaluate the accessibility bound for a self-centered graph of the
    given diameter (r = diam): d1 = ceil(diam/l), x = floor(d1/2),
    k = r - x, and the comparison of k against d1."""
    frac = as_fraction(l)
    d1 = math.ceil(Fraction(diameter) / frac)
    x = d1 // 2
    k_bound = diameter - x
    relation = "<" if k_bound < d1 else ("=" if k_bound == d1 else ">")
    return DirectSubstitutionRow(diameter=diameter, d1=d1, x=x, k_bound=k_bound, relation=relation)
