"""Undirected simple graphs over dense integer labels, plus the wheel seed.

Vertices are ``0 .. n-1``. Wheels put the hub at 0 and the rim at
``1 .. m-1`` in cyclic order; vertices added later take the next free label.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import DomainError, InvalidParameterError, ResourceLimitError

DEFAULT_CYCLE_COUNT_CAP = 12


class Triangle(NamedTuple):
    """A 3-cycle stored as its strictly increasing vertex triple."""

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "Triangle":
        a, b, c = sorted((int(x), int(y), int(z)))
        if a == b or b == c:
            raise InvalidParameterError(f"triangle needs three distinct vertices, got {(x, y, z)}")
        return cls(a, b, c)

    def edges(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        """The three sides, each as ``(min, max)``, in lexicographic order."""
        return (self.a, self.b), (self.a, self.c), (self.b, self.c)


class SimpleGraph:
    """Loop-free undirected graph backed by one adjacency set per vertex."""

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, vertex_count: int = 0, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise InvalidParameterError("vertex_count must be non-negative")
        self._adj: list[set[int]] = [set() for _ in range(vertex_count)]
        self._edge_count = 0
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def vertices(self) -> range:
        return range(len(self._adj))

    def add_vertex(self) -> int:
        """Append a vertex and return its label."""
        self._adj.append(set())
        return len(self._adj) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise InvalidParameterError(f"vertex {v} out of range for {len(self._adj)} vertices")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidParameterError(f"self-loop on vertex {u}")
        if v not in self._adj[u]:
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._edge_count += 1

    def remove_edge(self, u: int, v: int) -> None:
        if self.has_edge(u, v):
            self._adj[u].discard(v)
            self._adj[v].discard(u)
            self._edge_count -= 1

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self._adj) and v in self._adj[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return sorted(self._adj[v])

    def neighbor_set(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph()
        g._adj = [set(nbrs) for nbrs in self._adj]
        g._edge_count = self._edge_count
        return g

    def audit(self) -> list[str]:
        """Structural problems found (empty when symmetric, loop-free, in range)."""
        problems = []
        n = len(self._adj)
        half_edges = 0
        for u, nbrs in enumerate(self._adj):
            half_edges += len(nbrs)
            if u in nbrs:
                problems.append(f"loop at {u}")
            for v in nbrs:
                if not 0 <= v < n:
                    problems.append(f"neighbor {v} of {u} out of range")
                elif u not in self._adj[v]:
                    problems.append(f"asymmetric edge {u}->{v}")
        if half_edges != 2 * self._edge_count:
            problems.append(f"edge counter {self._edge_count} != {half_edges}/2")
        return problems

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"SimpleGraph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"


def make_wheel(m: int) -> SimpleGraph:
    """Wheel of order ``m``: hub 0 joined to every vertex of the rim cycle 1..m-1."""
    if m < 4:
        raise InvalidParameterError(f"wheel order must be >= 4, got {m}")
    g = SimpleGraph(m)
    for i in range(1, m):
        g.add_edge(0, i)
    for i in range(1, m - 1):
        g.add_edge(i, i + 1)
    g.add_edge(m - 1, 1)
    return g


def enumerate_triangles(g: SimpleGraph) -> list[Triangle]:
    """All 3-cycles, in lexicographic order of their canonical triples."""
    found = []
    for u, v in g.edges():
        common = g.neighbor_set(u) & g.neighbor_set(v)
        found.extend(Triangle(u, v, w) for w in common if w > v)
    found.sort()
    return found


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = math.inf
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in g.neighbor_set(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def _bfs_distances(g: SimpleGraph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbor_set(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: SimpleGraph) -> int:
    """Largest eccentricity; raises DomainError when ``g`` is disconnected."""
    best = 0
    for v in g.vertices():
        dist = _bfs_distances(g, v)
        if min(dist) < 0:
            raise DomainError("diameter is undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


def is_hamiltonian_cycle(g: SimpleGraph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists every vertex once and consecutive entries (cyclically) are adjacent."""
    n = g.vertex_count
    try:
        seq = [int(v) for v in cycle]
    except (TypeError, ValueError):
        return False
    if n < 3 or len(seq) != n or sorted(seq) != list(range(n)):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n))


def count_simple_cycles(g: SimpleGraph, max_vertices: int = DEFAULT_CYCLE_COUNT_CAP) -> int:
    """Number of undirected simple cycles (length >= 3).

    Each cycle is rooted at its smallest vertex and walked in both
    directions, so the raw DFS tally is halved.
    """
    if g.vertex_count > max_vertices:
        raise ResourceLimitError(
            f"cycle counting is capped at {max_vertices} vertices, graph has {g.vertex_count}"
        )
    adj = [sorted(g.neighbor_set(v)) for v in g.vertices()]
    total = 0
    on_path = [False] * g.vertex_count

    def walk(start: int, x: int, length: int) -> int:
        closed = 0
        for y in adj[x]:
            if y == start:
                if length >= 3:
                    closed += 1
            elif y > start and not on_path[y]:
                on_path[y] = True
                closed += walk(start, y, length + 1)
                on_path[y] = False
        return closed

    for s in g.vertices():
        on_path[s] = True
        total += walk(s, s, 1)
        on_path[s] = False
    return total // 2


def adjacency_matrix(g: SimpleGraph) -> np.ndarray:
    n = g.vertex_count
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a
