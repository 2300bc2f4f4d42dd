"""Team predicates: domination radius, less-dispersiveness, BC/HC checks.

All functions are pure over immutable inputs and safe to evaluate in
parallel across candidate teams. The reduction factor ``l`` is an exact
rational (``fractions.Fraction``), so ceil(diam/l) carries no float error;
values like 3/2 and 1.6 sit exactly where rounding flips the target.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .graphs import Graph, UNREACHABLE, eccentricity_profile


@dataclass(frozen=True)
class TeamCandidate:
    """A vertex subset proposed as a team of its host graph."""

    host: Graph
    members: frozenset[int]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a team must be nonempty")
        if min(self.members) < 0 or max(self.members) >= self.host.n:
            raise ValueError(f"team members out of range for n={self.host.n}")

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def labels(self) -> list[str]:
        return [self.host.labels[v] for v in sorted(self.members)]


@dataclass(frozen=True)
class TeamReport:
    """Full verdict on one candidate team at a given reduction factor l.

    ``induced_diameter`` is ``UNREACHABLE`` when the induced subgraph is
    disconnected (serialized as null). The verdict is the strongest level
    achieved, ranked HC > BC > comfortable > none.
    """

    team: tuple[int, ...]
    l: Fraction
    is_connected: bool
    is_dominating_1: bool
    domination_radius: int
    induced_diameter: int
    less_dispersive: bool
    violators: tuple[int, ...]
    bc_target: int
    bc_condition: bool
    hc_condition: bool
    verdict: str

    @property
    def is_hc(self) -> bool:
        return self.verdict.endswith("-HC")

    @property
    def is_bc(self) -> bool:
        return self.verdict.endswith("-BC") or self.is_hc

    def to_json_dict(self, labels=None) -> dict:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        diam = None if self.induced_diameter >= UNREACHABLE else self.induced_diameter
        return {
            "team": [name(v) for v in self.team],
            "l": str(self.l),
            "is_connected": self.is_connected,
            "is_dominating_1": self.is_dominating_1,
            "domination_radius": self.domination_radius,
            "induced_diameter": diam,
            "less_dispersive": self.less_dispersive,
            "violators": [name(v) for v in self.violators],
            "bc_target": self.bc_target,
            "bc_condition": self.bc_condition,
            "hc_condition": self.hc_condition,
            "verdict": self.verdict,
        }


def as_fraction(l) -> Fraction:
    """Exact rational from 'p/q' or decimal text, int, float, or Fraction."""
    if isinstance(l, Fraction):
        return l
    if isinstance(l, int):
        return Fraction(l)
    if isinstance(l, float):
        # exact decimal reading, not the binary float expansion
        return Fraction(repr(l))
    return Fraction(str(l))


def _require_l(l) -> Fraction:
    frac = as_fraction(l)
    if frac <= 1:
        raise ValueError(f"reduction factor l must be > 1, got {frac}")
    return frac


def _member_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    if isinstance(members, TeamCandidate):
        return members.members
    out = frozenset(members)
    if not out:
        raise ValueError("a team must be nonempty")
    if min(out) < 0 or max(out) >= g.n:
        raise ValueError(f"team members out of range for n={g.n}")
    return out


def induced_metrics(g: Graph, members: frozenset[int]):
    """(connected, induced diameter, per-member induced eccentricity).

    BFS restricted to the member set; eccentricities are UNREACHABLE when
    some teammate cannot be reached inside the team.
    """
    order = sorted(members)
    adj_sub = {v: [w for w in g.adj[v] if w in members] for v in order}
    ecc: dict[int, int] = {}
    diameter = 0
    connected = True
    for src in order:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adj_sub[u]:
                if w not in dist:
                    dist[w] = du + 1
                    queue.append(w)
        if len(dist) < len(members):
            connected = False
            ecc[src] = UNREACHABLE
            diameter = UNREACHABLE
        else:
            e = max(dist.values())
            ecc[src] = e
            diameter = max(diameter, e)
    return connected, diameter, ecc


class SubsetEvaluator:
    """Per-graph scratch for tight enumeration loops: plain-list distances
    and adjacency, and a single-pass profile of any vertex subset."""

    def __init__(self, g: Graph):
        self.g = g
        self.dist = g.distances().tolist()
        self.ecc = [max(row) for row in self.dist]
        self.adj = [tuple(nbrs) for nbrs in g.adj]
        self.n = g.n

    def profile(self, subset) -> tuple[bool, int, bool, int | None]:
        """(connected, induced_diameter, less_dispersive, domination_radius);
        the radius is None when the subset is disconnected."""
        members = set(subset)
        diameter = 0
        less = True
        for src in subset:
            dist = {src: 0}
            queue = deque([src])
            while queue:
                u = queue.popleft()
                du = dist[u]
                for w in self.adj[u]:
                    if w in members and w not in dist:
                        dist[w] = du + 1
                        queue.append(w)
            if len(dist) < len(members):
                return False, UNREACHABLE, False, None
            e = max(dist.values())
            if e >= self.ecc[src]:
                less = False
            if e > diameter:
                diameter = e
        k = 0
        rows = self.dist
        for u in range(self.n):
            if u not in members:
                best = min(rows[u][v] for v in subset)
                if best > k:
                    k = best
        return True, diameter, less, k


def bc_target(g: Graph, l) -> int:
    """The induced-diameter ceiling ceil(diam(G)/l), computed exactly."""
    frac = _require_l(l)
    diam = eccentricity_profile(g).diameter
    return math.ceil(Fraction(diam) / frac)


def domination_radius(g: Graph, members: Iterable[int] | TeamCandidate) -> int:
    """Smallest k with every outside vertex within k hops of the team;
    0 when the team is the whole vertex set."""
    team = _member_set(g, members)
    if not g.is_connected():
        raise ValueError("domination radius requires a connected graph")
    outside = sorted(set(range(g.n)) - team)
    if not outside:
        return 0
    dist = g.distances()
    block = dist[np.ix_(outside, sorted(team))]
    return int(block.min(axis=1).max())


def is_dominating(g: Graph, members: Iterable[int] | TeamCandidate, k: int) -> bool:
    """True when the team k-distance dominates the rest of the graph."""
    if k < 1:
        raise ValueError(f"domination distance must be >= 1, got {k}")
    return domination_radius(g, members) <= k


def is_less_dispersive(
    g: Graph, members: Iterable[int] | TeamCandidate
) -> tuple[bool, tuple[int, ...]]:
    """Strict per-member eccentricity drop inside the team.

    Returns (ok, violators): a violator keeps (or exceeds, when the team
    is disconnected) its whole-graph eccentricity. The whole vertex set is
    never less dispersive since nothing can drop.
    """
    team = _member_set(g, members)
    if not g.is_connected():
        raise ValueError("less-dispersiveness requires a connected host graph")
    host_ecc = g.distances().max(axis=1)
    _, _, ind_ecc = induced_metrics(g, team)
    violators = tuple(v for v in sorted(team) if ind_ecc[v] >= int(host_ecc[v]))
    return not violators, violators


def check_hc(g: Graph, members: Iterable[int] | TeamCandidate, l) -> TeamReport:
    """Evaluate every team condition at ``l`` and assemble the report.

    A disconnected team short-circuits: the BC and HC flags are false and
    the induced diameter is the UNREACHABLE sentinel.
    """
    frac = _require_l(l)
    team = _member_set(g, members)
    if not g.is_connected():
        raise ValueError("team checks require a connected host graph")

    connected, ind_diam, ind_ecc = induced_metrics(g, team)
    host_ecc = g.distances().max(axis=1)
    violators = tuple(v for v in sorted(team) if ind_ecc[v] >= int(host_ecc[v]))
    less_disp = not violators

    k = domination_radius(g, team)
    target = math.ceil(Fraction(int(host_ecc.max())) / frac)
    bc_cond = connected and ind_diam <= target
    hc_cond = connected and k <= ind_diam

    comfortable_ok = connected and k <= 1 and less_disp
    bc_ok = connected and less_disp and bc_cond
    hc_ok = bc_ok and hc_cond
    if hc_ok:
        verdict = f"{frac}-HC"
    elif bc_ok:
        verdict = f"{frac}-BC"
    elif comfortable_ok:
        verdict = "comfortable"
    else:
        verdict = "none"

    return TeamReport(
        team=tuple(sorted(team)),
        l=frac,
        is_connected=connected,
        is_dominating_1=k <= 1,
        domination_radius=k,
        induced_diameter=ind_diam,
        less_dispersive=less_disp,
        violators=violators,
        bc_target=target,
        bc_condition=bc_cond,
        hc_condition=hc_cond,
        verdict=verdict,
    )


def check_bc(g: Graph, members: Iterable[int] | TeamCandidate, l) -> bool:
    """True iff the team is connected, less dispersive, and meets the
    induced-diameter ceiling for ``l``."""
    report = check_hc(g, members, l)
    return report.is_connected and report.less_dispersive and report.bc_condition


def is_comfortable(g: Graph, members: Iterable[int] | TeamCandidate) -> bool:
    """Connected, dominating at distance one, and less dispersive."""
    team = _member_set(g, members)
    connected, _, _ = induced_metrics(g, team)
    if not connected:
        return False
    ok, _ = is_less_dispersive(g, team)
    return ok and domination_radius(g, team) <= 1
