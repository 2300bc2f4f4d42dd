"""Immutable graphs, hop metrics, and edge-list / DOT input-output.

Vertices are dense 0-based indices. Human-facing labels (``v1`` .. ``vn``
by default) live in a sidecar tuple on the graph and never enter the
algorithms. Distances are hop counts computed by breadth-first search and
cached per graph as an ``n x n`` numpy matrix; ``UNREACHABLE`` marks pairs
in different components and is strictly larger than any real hop count, so
max/min aggregations stay well defined on disconnected vertex sets.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

#: Sentinel hop distance for unreachable pairs. Strictly greater than any
#: valid distance (a path has at most n - 1 hops); never 0 or -1.
UNREACHABLE = 2**31 - 1

#: Distance matrices are plain ``n x n`` int64 numpy arrays with
#: ``UNREACHABLE`` entries for cross-component pairs.
DistanceMatrix = np.ndarray


class EdgeListParseError(ValueError):
    """Malformed edge-list text; the message names the offending line."""


class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    Instances are immutable after construction and safe to share across
    threads. The all-pairs distance matrix is computed lazily and cached;
    recomputation is deterministic, so a benign double-compute under
    concurrency cannot change the result.
    """

    __slots__ = ("n", "edges", "adj", "labels", "_dist", "_connected")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(normalized)
        self.adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        if labels is None:
            self.labels = tuple(f"v{i + 1}" for i in range(n))
        else:
            label_tuple = tuple(str(s) for s in labels)
            if len(label_tuple) != n or len(set(label_tuple)) != n:
                raise ValueError("labels must be distinct and cover every vertex")
            self.labels = label_tuple
        self._dist: np.ndarray | None = None
        self._connected: bool | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self.adj)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def is_connected(self) -> bool:
        if self._connected is None:
            seen = _bfs_reach(self.adj, 0)
            self._connected = len(seen) == self.n
        return self._connected

    def distances(self) -> DistanceMatrix:
        """All-pairs hop distances, cached on first use."""
        if self._dist is None:
            self._dist = all_pairs_distances(self)
        return self._dist

    def vertex_for_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Induced(NamedTuple):
    """An induced subgraph together with its bidirectional index map."""

    graph: Graph
    host_vertices: tuple[int, ...]  # new index -> host vertex
    host_index: dict[int, int]      # host vertex -> new index


@dataclass(frozen=True)
class EccentricityProfile:
    """Per-vertex eccentricities plus the derived center/periphery summary."""

    eccentricity: tuple[int, ...]
    radius: int
    diameter: int
    center: tuple[int, ...]
    periphery: tuple[int, ...]
    class_label: str

    def to_json_dict(self, labels: Sequence[str] | None = None) -> dict:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        return {
            "eccentricity": list(self.eccentricity),
            "radius": self.radius,
            "diameter": self.diameter,
            "center": [name(v) for v in self.center],
            "periphery": [name(v) for v in self.periphery],
            "class": self.class_label,
        }


def _bfs_reach(adj: Sequence[Sequence[int]], source: int) -> set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _bfs_levels(adj: Sequence[Sequence[int]], source: int, n: int) -> list[int]:
    dist = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; ``UNREACHABLE`` for other components."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range for n={g.n}")
    return np.array(_bfs_levels(g.adj, source, g.n), dtype=np.int64)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Run one BFS per vertex; rows are emitted in vertex order.

    Sequential and deterministic; per-source runs are independent, so the
    matrix is bit-identical however the rows are scheduled.
    """
    rows = [_bfs_levels(g.adj, s, g.n) for s in range(g.n)]
    return np.array(rows, dtype=np.int64)


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    """Eccentricities, radius, diameter, center, periphery, class label.

    Raises on disconnected input: callers must decompose into components
    first (see ``connected_components``).
    """
    dist = g.distances()
    if (dist >= UNREACHABLE).any():
        raise ValueError("graph is disconnected; analyze each component separately")
    ecc = dist.max(axis=1)
    radius = int(ecc.min())
    diameter = int(ecc.max())
    a = diameter - radius
    if a == 0:
        label = "self-centered"
    elif a == 1:
        label = "bi-eccentric"
    elif a == 2:
        label = "tri-eccentric"
    else:
        label = f"{a + 1}-eccentric"
    return EccentricityProfile(
        eccentricity=tuple(int(e) for e in ecc),
        radius=radius,
        diameter=diameter,
        center=tuple(int(v) for v in np.flatnonzero(ecc == radius)),
        periphery=tuple(int(v) for v in np.flatnonzero(ecc == diameter)),
        class_label=label,
    )


def shell(g: Graph, v: int, j: int) -> frozenset[int]:
    """Vertices at exactly distance ``j`` from ``v`` (empty when j > e(v))."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if j < 0:
        raise ValueError(f"shell index must be >= 0, got {j}")
    row = g.distances()[v]
    return frozenset(int(u) for u in np.flatnonzero(row == j))


def induced_subgraph(g: Graph, members: Iterable[int]) -> Induced:
    """Subgraph induced by ``members`` with the host/sub index maps.

    The induced graph computes its own distance matrix: induced distances
    and eccentricities generally differ from the host's restricted ones.
    """
    vertices = sorted(set(members))
    if not vertices:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if vertices[0] < 0 or vertices[-1] >= g.n:
        raise ValueError(f"vertex set out of range for n={g.n}")
    host_index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (host_index[u], host_index[v])
        for u, v in g.edges
        if u in host_index and v in host_index
    ]
    sub = Graph(len(vertices), edges, labels=[g.labels[v] for v in vertices])
    return Induced(sub, tuple(vertices), host_index)


def graph_power(g: Graph, k: int) -> Graph:
    """Graph on the same vertices with an edge wherever 1 <= d(u,v) <= k."""
    if k < 1:
        raise ValueError(f"graph power requires k >= 1, got {k}")
    dist = g.distances()
    iu = np.triu_indices(g.n, k=1)
    close = (dist[iu] >= 1) & (dist[iu] <= k)
    edges = list(zip(iu[0][close].tolist(), iu[1][close].tolist()))
    return Graph(g.n, edges, labels=g.labels)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set; a single part iff the graph is connected."""
    remaining = set(range(g.n))
    parts = []
    while remaining:
        start = min(remaining)
        part = frozenset(_bfs_reach(g.adj, start) & remaining)
        # BFS from a remaining vertex cannot leave its component
        parts.append(part)
        remaining -= part
    return sorted(parts, key=min)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Blank lines and ``#`` comments are skipped; CRLF is tolerated. Errors
    name the 1-based line number. Duplicate edges are merged.
    """
    significant: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        significant.append((lineno, line))
    if not significant:
        raise EdgeListParseError("line 1: empty input, expected header 'n m'")

    lineno, header = significant[0]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListParseError(f"line {lineno}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListParseError(f"line {lineno}: non-integer header {header!r}") from None
    if n < 1:
        raise EdgeListParseError(f"line {lineno}: vertex count must be >= 1, got {n}")
    if m < 0:
        raise EdgeListParseError(f"line {lineno}: edge count must be >= 0, got {m}")

    body = significant[1:]
    if len(body) != m:
        raise EdgeListParseError(
            f"line {lineno}: header promises {m} edges but {len(body)} edge lines follow"
        )
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: non-integer endpoints {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"line {lineno}: vertex out of range 0..{n - 1}: {line!r}")
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header then sorted edges, one per line."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, team: Iterable[int] | None = None) -> str:
    """DOT text with team vertices filled; vertex and edge order is fixed."""
    members = set(team) if team is not None else set()
    lines = ["graph G {"]
    for v in range(g.n):
        if v in members:
            lines.append(f'  "{g.labels[v]}" [style=filled, fillcolor=lightblue, team=true];')
        else:
            lines.append(f'  "{g.labels[v]}";')
    for u, v in sorted(g.edges):
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    """Short stable identifier derived from the canonical edge list."""
    return hashlib.sha1(serialize_edge_list(g).encode()).hexdigest()[:12]
