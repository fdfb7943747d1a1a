"""Exhaustive searches used to check the construction's claims on small instances."""

from __future__ import annotations

from itertools import product
from typing import Optional

from ..counting import count_histories
from ..errors import InvalidParameterError, ResourceLimitError
from ..graph import SimpleGraph
from ..state import GrowthMode, WragState, seed_state

DEFAULT_EXACT_CAP = 16
DEFAULT_ENUM_CAP = 10**6
DEFAULT_COLORING_COUNT_CAP = 7


def _check_cap(g: SimpleGraph, cap: int, what: str) -> None:
    if g.vertex_count > cap:
        raise ResourceLimitError(f"{what} is capped at {cap} vertices, graph has {g.vertex_count}")


def enumerate_all_histories(
    m: int,
    steps: int,
    mode: GrowthMode | str = GrowthMode.ALL_3_CYCLES,
    max_count: int = DEFAULT_ENUM_CAP,
) -> list[WragState]:
    """Every state reachable in exactly ``steps`` steps, ordered by history."""
    if steps < 0:
        raise InvalidParameterError("steps must be non-negative")
    mode = GrowthMode.parse(mode)
    predicted = count_histories(m, m + steps, mode)
    if predicted > max_count:
        raise ResourceLimitError(f"{predicted} histories exceed the enumeration cap {max_count}")

    out: list[WragState] = []

    def expand(state: WragState, depth: int) -> None:
        if depth == steps:
            out.append(state)
            return
        for t in state.sorted_choosable():
            expand(state.step_with(t), depth + 1)

    expand(seed_state(m, mode), 0)
    return out


def exact_hamiltonian_search(g: SimpleGraph, max_vertices: int = DEFAULT_EXACT_CAP) -> Optional[list[int]]:
    """A Hamiltonian cycle starting at vertex 0, or None if none exists."""
    _check_cap(g, max_vertices, "Hamiltonian search")
    n = g.vertex_count
    if n < 3:
        return None
    nbr_mask = [sum(1 << w for w in g.neighbor_set(v)) for v in g.vertices()]
    full = (1 << n) - 1
    path = [0]

    def dead_end(visited: int, end: int) -> bool:
        # An unvisited vertex needs two usable neighbors: unvisited ones, the path end, or the start.
        usable = (full & ~visited) | (1 << end) | 1
        rest = full & ~visited
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            if bin(nbr_mask[w] & usable).count("1") < 2:
                return True
            rest ^= low
        return False

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(nbr_mask[v] & 1)
        free = nbr_mask[v] & ~visited
        candidates = [w for w in range(n) if free >> w & 1]
        candidates.sort(key=lambda w: (bin(nbr_mask[w] & ~visited).count("1"), w))
        for w in candidates:
            seen = visited | (1 << w)
            if dead_end(seen, w):
                continue
            path.append(w)
            if extend(w, seen):
                return True
            path.pop()
        return False

    return list(path) if extend(0, 1) else None


def _colorable(adj: list[list[int]], order: list[int], k: int) -> bool:
    colors = [-1] * len(adj)

    def place(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        taken = {colors[w] for w in adj[v]}
        # New colors are interchangeable, so only the first unused one is tried.
        for c in range(min(k, used + 1)):
            if c not in taken:
                colors[v] = c
                if place(idx + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def exact_chromatic_number(g: SimpleGraph, k_max: int = 4, max_vertices: int = DEFAULT_EXACT_CAP) -> Optional[int]:
    """Smallest k <= k_max with a proper k-coloring, or None when more than k_max are needed."""
    if k_max < 1:
        raise InvalidParameterError("k_max must be at least 1")
    _check_cap(g, max_vertices, "chromatic number search")
    if g.vertex_count == 0:
        return 0
    adj = [g.neighbors(v) for v in g.vertices()]
    order = sorted(g.vertices(), key=lambda v: (-len(adj[v]), v))
    for k in range(1, k_max + 1):
        if _colorable(adj, order, k):
            return k
    return None


def count_proper_colorings(g: SimpleGraph, k: int, max_vertices: int = DEFAULT_COLORING_COUNT_CAP) -> int:
    """Proper colorings with ``k`` colors, by trying all k^n assignments."""
    _check_cap(g, max_vertices, "exhaustive coloring count")
    edges = list(g.edges())
    return sum(
        all(assign[u] != assign[v] for u, v in edges)
        for assign in product(range(k), repeat=g.vertex_count)
    )
