"""Immutable undirected simple graph plus classical traversal primitives.

Vertices are dense 0-based internal indices; the original external labels
(edge lists are typically 1-based) are kept alongside and used for all
user-facing output.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from nmgraph.errors import ParseError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph stored as per-vertex neighbour sets.

    labels[i] is the external label of internal vertex i; adj[i] is the
    frozenset of internal neighbour indices.  No self-loops, symmetric.
    """

    labels: tuple[int, ...]
    adj: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def index_of(self, label: int) -> int:
        return self.labels.index(label)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex index {v} out of range for n={self.n}")


def from_edges(n: int, edges: Iterable[tuple[int, int]],
               labels: tuple[int, ...] | None = None) -> Graph:
    """Build a Graph from 0-based index pairs; duplicates collapse."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of bounds for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    if labels is None:
        labels = tuple(range(n))
    return Graph(labels=labels, adj=tuple(frozenset(a) for a in adj))


@dataclass(frozen=True)
class LevelAssignment:
    """BFS distance of every vertex from a root; UNREACHABLE where none."""

    root: int
    level: tuple[int, ...]

    def vertices_at(self, depth: int) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.level) if d == depth)

    def eccentricity(self) -> int | float:
        """Max finite level, or inf if some vertex is unreachable."""
        if UNREACHABLE in self.level:
            return math.inf
        return max(self.level)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components: contiguous ids assigned in first-seen order."""

    count: int
    membership: tuple[int, ...]

    def vertices_of(self, cid: int) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.membership) if c == cid)


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines into a Graph.

    Labels are arbitrary non-negative integers; they are remapped to dense
    internal indices in first-appearance order (reading each line left to
    right).  '#' lines and blank lines are ignored; duplicate edges
    collapse.  Self-loops and non-integer tokens are rejected with the
    offending line number.
    """
    label_to_index: dict[int, int] = {}
    labels: list[int] = []
    edges: list[tuple[int, int]] = []

    def intern(label: int) -> int:
        idx = label_to_index.get(label)
        if idx is None:
            idx = len(labels)
            label_to_index[label] = idx
            labels.append(label)
        return idx

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two tokens, got {len(parts)}: {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise ParseError(f"negative label in {line!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop {a}-{b} not allowed", lineno)
        edges.append((intern(a), intern(b)))

    return from_edges(len(labels), edges, labels=tuple(labels))


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list: one "u v" line per edge, sorted by label."""
    lines = sorted(
        (min(g.labels[u], g.labels[v]), max(g.labels[u], g.labels[v]))
        for u, v in g.edges()
    )
    return "".join(f"{a} {b}\n" for a, b in lines)


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    """N(u) ∩ N(v); with u == v this is just N(u)."""
    g._check_vertex(u)
    g._check_vertex(v)
    return g.adj[u] & g.adj[v]


def exclusive_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    """N(u) \\ N(v); argument order matters."""
    g._check_vertex(u)
    g._check_vertex(v)
    return g.adj[u] - g.adj[v]


def bfs_levels(g: Graph, root: int) -> LevelAssignment:
    """Level decomposition from root: level k = vertices at distance k."""
    g._check_vertex(root)
    level = [UNREACHABLE] * g.n
    level[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if level[v] == UNREACHABLE:
                level[v] = level[u] + 1
                queue.append(v)
    return LevelAssignment(root=root, level=tuple(level))


def connected_components(g: Graph) -> ComponentPartition:
    membership = [UNREACHABLE] * g.n
    count = 0
    for start in range(g.n):
        if membership[start] != UNREACHABLE:
            continue
        membership[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if membership[v] == UNREACHABLE:
                    membership[v] = count
                    queue.append(v)
        count += 1
    return ComponentPartition(count=count, membership=tuple(membership))


def diameter(g: Graph) -> int | float:
    """Max pairwise distance; inf for disconnected graphs and n <= 1."""
    if g.n <= 1:
        return math.inf
    best = 0
    for root in range(g.n):
        ecc = bfs_levels(g, root).eccentricity()
        if ecc == math.inf:
            return math.inf
        best = max(best, ecc)
    return best


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; inf for forests.

    For every edge (u, v): the shortest cycle through that edge is one
    plus the u-v distance with the edge removed.
    """
    best: int | float = math.inf
    for u, v in g.edges():
        dist = _distance_avoiding_edge(g, u, v)
        if dist is not None:
            best = min(best, dist + 1)
    return best


def _distance_avoiding_edge(g: Graph, src: int, dst: int) -> int | None:
    level = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if {x, y} == {src, dst}:
                continue
            if y not in level:
                level[y] = level[x] + 1
                if y == dst:
                    return level[y]
                queue.append(y)
    return None
