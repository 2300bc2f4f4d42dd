"""Exhaustive ground truth on small graphs.

Subsets are enumerated in increasing (or decreasing, for maximization)
cardinality with a connectivity pre-filter, and the first feasible
cardinality wins; within it the minimal domination radius is the
secondary objective and lexicographic order breaks remaining ties.
Infeasibility is a first-class answer: whole graph families admit no
comfortable team, and the enumerator proves it by exhaustion.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .criteria import SubsetEvaluator, as_fraction, bc_target
from .graphs import Graph, eccentricity_profile, graph_digest, graph_power
from .hicom import BoundCheck, HicomError, hicom

DEFAULT_CAP = 14
_CAP_ENV = "COMFNET_ORACLE_CAP"

KINDS = ("comfortable", "bc", "hc", "cds")


@dataclass(frozen=True)
class OracleAnswer:
    """Exact optimum with one witness, or NONE after exhausting the space."""

    kind: str
    l: Fraction | None
    optimum: int | None
    witness: tuple[int, ...] | None
    secondary_optimum: int | None  # minimal domination radius at the optimum size
    enumerated: int

    def to_json_dict(self, labels=None) -> dict:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        return {
            "kind": self.kind,
            "l": None if self.l is None else str(self.l),
            "optimum": self.optimum,
            "witness": None if self.witness is None else [name(v) for v in self.witness],
            "k": self.secondary_optimum,
            "enumerated": self.enumerated,
        }


@dataclass(frozen=True)
class RatioRecord:
    """Heuristic size against the exact optimum for one graph."""

    digest: str
    n: int
    l: Fraction
    hicom_size: int
    oracle_size: int
    ratio: float
    k_hicom: int
    k_oracle: int
    log_max_degree: float

    def to_json_dict(self) -> dict:
        return {
            "graph": self.digest,
            "n": self.n,
            "l": str(self.l),
            "hicom_size": self.hicom_size,
            "oracle_size": self.oracle_size,
            "ratio": self.ratio,
            "k_hicom": self.k_hicom,
            "k_oracle": self.k_oracle,
            "ln_max_degree": self.log_max_degree,
        }


def oracle_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(_CAP_ENV)
    return int(env) if env else DEFAULT_CAP


def _check_cap(g: Graph, cap: int | None) -> None:
    limit = oracle_cap(cap)
    if g.n > limit:
        raise ValueError(
            f"oracle cap exceeded: n={g.n} > {limit} "
            f"(raise the cap argument or {_CAP_ENV} to override)"
        )


def _feasibility(kind: str, target: int | None):
    """Predicate over a subset profile for one team kind.

    The 'bc' minimization uses the tight-diameter reading: the team's
    induced diameter must equal the target exactly, i.e. the team spends
    its whole communication budget. Under the lenient <= reading every
    non-universal singleton qualifies (diameter 0, huge domination radius)
    and the minimum collapses to 1, which contradicts the worked C6 value;
    the tight reading reproduces it. The 'hc' kind keeps <=: its
    accessibility condition k <= diam already rules the degenerate sets
    out, and the heuristic-vs-exact ratio needs the global size minimum.
    """

    def feasible(connected, diameter, less, k) -> bool:
        if not connected:
            return False
        if kind == "cds":
            return k <= 1
        if not less:
            return False
        if kind == "comfortable":
            return k <= 1
        if kind == "hc":
            return diameter <= target and k <= diameter
        return diameter == target  # bc, tight reading

    return feasible


def _scan_cardinality(ev, feasible, size: int):
    """Best feasible subset of one cardinality: minimal k, then lexicographic."""
    best = None
    examined = 0
    for subset in combinations(range(ev.n), size):
        examined += 1
        connected, diameter, less, k = ev.profile(subset)
        if feasible(connected, diameter, less, k) and (best is None or k < best[0]):
            best = (k, subset)
    return best, examined


def exact_min_team(g: Graph, kind: str, l=None, cap: int | None = None) -> OracleAnswer:
    """Exact minimum team size for one kind over all nonempty proper subsets.

    'comfortable' ignores l; 'bc' and 'hc' need l > 1. The enumeration
    stops at the first feasible cardinality; the reported domination
    radius is the minimum among optimum-size teams.
    """
    if kind not in ("comfortable", "bc", "hc"):
        raise ValueError(f"unknown team kind {kind!r}")
    if not g.is_connected():
        raise ValueError("oracle requires a connected graph")
    _check_cap(g, cap)
    frac = None
    target = None
    if kind in ("bc", "hc"):
        frac = as_fraction(l)
        target = bc_target(g, frac)
    ev = SubsetEvaluator(g)
    feasible = _feasibility(kind, target)
    enumerated = 0
    for size in range(1, g.n):  # proper subsets only
        best, examined = _scan_cardinality(ev, feasible, size)
        enumerated += examined
        if best is not None:
            return OracleAnswer(kind, frac, size, best[1], best[0], enumerated)
    return OracleAnswer(kind, frac, None, None, None, enumerated)


def exact_max_team(g: Graph, l, cap: int | None = None) -> OracleAnswer:
    """Exact maximum-cardinality team passing all four HC conditions."""
    if not g.is_connected():
        raise ValueError("oracle requires a connected graph")
    _check_cap(g, cap)
    frac = as_fraction(l)
    target = bc_target(g, frac)
    ev = SubsetEvaluator(g)
    feasible = _feasibility("hc", target)
    enumerated = 0
    for size in range(g.n - 1, 0, -1):
        best, examined = _scan_cardinality(ev, feasible, size)
        enumerated += examined
        if best is not None:
            return OracleAnswer("hc-max", frac, size, best[1], best[0], enumerated)
    return OracleAnswer("hc-max", frac, None, None, None, enumerated)


def exact_min_cds(g: Graph, cap: int | None = None) -> OracleAnswer:
    """Minimum connected dominating set; the whole vertex set counts here
    (it is trivially connected and dominating), unlike the team kinds."""
    if not g.is_connected():
        raise ValueError("oracle requires a connected graph")
    _check_cap(g, cap)
    ev = SubsetEvaluator(g)
    feasible = _feasibility("cds", None)
    enumerated = 0
    for size in range(1, g.n + 1):
        best, examined = _scan_cardinality(ev, feasible, size)
        enumerated += examined
        if best is not None:
            return OracleAnswer("cds", None, size, best[1], best[0], enumerated)
    return OracleAnswer("cds", None, None, None, None, enumerated)


def reduction_witness(
    g: Graph, k: int, members: Iterable[int], power: Graph | None = None
) -> tuple[bool, bool]:
    """Both sides of the power-graph correspondence for one subset.

    Left: the subset k-distance dominates the host graph (hop distances)
    and induces a connected subgraph of the k-th power. Right: the subset
    dominates the k-th power at distance one and induces a connected
    subgraph of it. The two sides agree for every subset, which is what
    makes connected domination in the power graph the right reduction
    object. Sweeps may pass the precomputed ``power`` graph.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    subset = frozenset(members)
    if subset and (min(subset) < 0 or max(subset) >= g.n):
        raise ValueError(f"subset out of range for n={g.n}")
    if power is None:
        power = graph_power(g, k)

    if not subset:
        return False, False

    def connected_in(h: Graph) -> bool:
        start = min(subset)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in h.adj[u]:
                if w in subset and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(subset)

    power_connected = connected_in(power)

    dist = g.distances()
    outside = [u for u in range(g.n) if u not in subset]
    k_dominates = all(min(int(dist[u][v]) for v in subset) <= k for u in outside)

    adjsets = [set(nbrs) for nbrs in power.adj]
    power_dominates = all(adjsets[u] & subset for u in outside)

    return (k_dominates and power_connected, power_dominates and power_connected)


def ratio_experiment(corpus: Iterable[Graph], l, cap: int | None = None):
    """Heuristic-vs-exact sizes over a corpus.

    Returns (records, summary, skipped); graphs where the heuristic finds
    no team are skipped with a note. A heuristic success on a graph the
    oracle calls infeasible is a contract violation and raises.
    """
    frac = as_fraction(l)
    records: list[RatioRecord] = []
    skipped: list[dict] = []
    for g in corpus:
        digest = graph_digest(g)
        try:
            result = hicom(g, frac)
        except HicomError as exc:
            skipped.append({"graph": digest, "reason": f"hicom: {exc}"})
            continue
        answer = exact_min_team(g, "hc", frac, cap=cap)
        if answer.optimum is None:
            raise RuntimeError(
                f"oracle found no {frac}-HC team on {digest} where hicom succeeded"
            )
        records.append(
            RatioRecord(
                digest=digest,
                n=g.n,
                l=frac,
                hicom_size=len(result.team.members),
                oracle_size=answer.optimum,
                ratio=len(result.team.members) / answer.optimum,
                k_hicom=result.k,
                k_oracle=answer.secondary_optimum,
                log_max_degree=math.log(g.max_degree),
            )
        )
    summary = summarize_ratios(records)
    return records, summary, skipped


def summarize_ratios(records: Sequence[RatioRecord]) -> dict:
    if not records:
        return {"count": 0}
    ratios = [r.ratio for r in records]
    k_ratios = [r.k_hicom / r.k_oracle for r in records]
    return {
        "count": len(records),
        "max_ratio": max(ratios),
        "mean_ratio": sum(ratios) / len(ratios),
        "max_k_ratio": max(k_ratios),
        "max_ln_max_degree": max(r.log_max_degree for r in records),
    }


def bound_sweep(corpus: Iterable[Graph], l, cap: int | None = None):
    """Check l(k*-1) <= diam(G) <= l(2k*+1)/(l-1) with the oracle-minimal
    dispersion index on every feasible graph; infeasible graphs are
    skipped with a note."""
    frac = as_fraction(l)
    checks: list[BoundCheck] = []
    skipped: list[dict] = []
    for g in corpus:
        digest = graph_digest(g)
        answer = exact_min_team(g, "hc", frac, cap=cap)
        if answer.optimum is None:
            skipped.append({"graph": digest, "reason": f"no {frac}-HC team"})
            continue
        k_star = answer.secondary_optimum
        diam = eccentricity_profile(g).diameter
        context = f"{digest} l={frac} k*={k_star}"
        lower = frac * (k_star - 1)
        upper = frac * (2 * k_star + 1) / (frac - 1)
        checks.append(
            BoundCheck(
                name="l(k*-1) <= diam(G)",
                lhs=float(lower),
                rhs=float(diam),
                holds=lower <= diam,
                context=context,
            )
        )
        checks.append(
            BoundCheck(
                name="diam(G) <= l(2k*+1)/(l-1)",
                lhs=float(diam),
                rhs=float(upper),
                holds=diam <= upper,
                context=context,
            )
        )
    return checks, skipped
