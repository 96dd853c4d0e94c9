"""Immutable simple-graph core: distance queries, structural predicates, edge-list I/O.

Vertices are dense integer ids 0..n-1. A vertex set is always a sorted tuple
of distinct ids. Graphs are value objects: build them through ``GraphBuilder``
(or the ``Graph.from_edges`` shortcut), after which they are safe to share.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from itertools import combinations

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Invalid graph construction or query."""


class ParseError(GraphError):
    """Malformed edge-list document; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with sorted adjacency lists.

    ``labels``, when present, carries one role string per vertex so that
    transformed instances can report where each vertex came from.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        b = GraphBuilder(n)
        for u, v in edges:
            b.add_edge(u, v)
        return b.build(labels=labels)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    out.append((u, v))
        return out

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]


class GraphBuilder:
    """Mutable accumulator; all invariants are validated at ``build`` time."""

    def __init__(self, n: int):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge ({u},{v})")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def build(self, labels=None) -> Graph:
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != self.n:
                raise GraphError("labels length must equal vertex count")
        adjacency = tuple(tuple(sorted(a)) for a in self._adj)
        return Graph(n=self.n, adjacency=adjacency, labels=labels)


def bfs_distances(g: Graph, v: int) -> list[int]:
    """Shortest-path distance from v to every vertex; -1 for unreachable."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    dist = [-1] * g.n
    dist[v] = 0
    q = deque([v])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def exact_distance_neighborhood(g: Graph, v: int, r: int) -> VertexSet:
    """Vertices at shortest-path distance exactly r from v (r >= 1)."""
    if r < 1:
        raise GraphError(f"radius must be >= 1, got {r}")
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    # BFS truncated at depth r; unreachable vertices never qualify.
    dist = {v: 0}
    q = deque([v])
    out = []
    while q:
        u = q.popleft()
        if dist[u] == r:
            out.append(u)
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return tuple(sorted(out))


def distance2_sets(g: Graph) -> list[VertexSet]:
    """N(v,2) for every v, computed once for solver use."""
    return [exact_distance_neighborhood(g, v, 2) for v in range(g.n)]


def is_regular(g: Graph, d: int) -> bool:
    return all(len(a) == d for a in g.adjacency)


def is_claw_free(g: Graph) -> bool:
    """True iff g has no induced K_{1,3}.

    Scans neighbor triples of every vertex; a claw exists exactly when some
    vertex has three pairwise non-adjacent neighbors.
    """
    for v in range(g.n):
        nbrs = g.adjacency[v]
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                return False
    return True


def validate_vertex_set(g: Graph, s) -> VertexSet:
    """Normalize s into a sorted tuple, checking range and distinctness."""
    out = tuple(sorted(s))
    for i, v in enumerate(out):
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        if i > 0 and out[i - 1] == v:
            raise GraphError(f"duplicate vertex {v} in set")
    return out


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: first significant line "n m", then exactly m lines "u v" with
    0 <= u < v < n. Lines starting with '#' are comments; blank lines are
    ignored. Duplicate or reversed edges are rejected.
    """
    header = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    builder = None
    m_expected = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(line_no, f"expected header 'n m', got {line!r}")
            try:
                n, m_expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"non-integer header {line!r}") from None
            if n < 0 or m_expected < 0:
                raise ParseError(line_no, "negative counts in header")
            header = (n, m_expected)
            header_line = line_no
            builder = GraphBuilder(n)
            continue
        if len(parts) != 2:
            raise ParseError(line_no, f"expected edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer edge {line!r}") from None
        if not (0 <= u < builder.n and 0 <= v < builder.n):
            raise ParseError(line_no, f"edge ({u},{v}) out of range for n={builder.n}")
        if u >= v:
            raise ParseError(line_no, f"edge ({u},{v}) must satisfy u < v")
        if builder.has_edge(u, v):
            raise ParseError(line_no, f"duplicate edge ({u},{v})")
        builder.add_edge(u, v)
        edges.append((u, v))
    if header is None:
        raise ParseError(1, "empty document, expected header 'n m'")
    if len(edges) != m_expected:
        raise ParseError(header_line, f"header declares m={m_expected} but found {len(edges)} edges")
    return builder.build()


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: header plus edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
