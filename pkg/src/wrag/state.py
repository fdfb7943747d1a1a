"""Growth of a wheel random Apollonian graph, one stacked vertex at a time.

A state starts from the order-``m`` wheel. Each step picks a triangle that
has not been picked before, adds a vertex joined to its three corners, and
keeps two derived objects up to date:

* a Hamiltonian cycle, by routing the new vertex through one side of the
  picked triangle that lies on the current cycle. When no side lies on the
  cycle the heuristic gives up for the rest of the run and the state is
  flagged (``ham_heuristic_failed``);
* a proper 4-coloring, by giving the new vertex the one color its triangle
  does not use.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import InvalidChoiceError, InvalidParameterError, InvariantViolation
from .graph import SimpleGraph, Triangle, enumerate_triangles, is_hamiltonian_cycle, make_wheel
from .rng import RngStream

COLORS = (0, 1, 2, 3)


class GrowthMode(str, enum.Enum):
    """Which seed triangles may be picked.

    The modes differ only for m = 4, where ``PLANAR_FACES`` keeps the seed's
    rim triangle (1, 2, 3) out of the pool.
    """

    ALL_3_CYCLES = "all-3-cycles"
    PLANAR_FACES = "planar-faces"

    @classmethod
    def parse(cls, value: "str | GrowthMode") -> "GrowthMode":
        if isinstance(value, GrowthMode):
            return value
        aliases = {"all": cls.ALL_3_CYCLES, "planar": cls.PLANAR_FACES}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise InvalidParameterError(f"unknown growth mode {value!r}") from None


def _excluded_seed_triangles(m: int, mode: GrowthMode) -> frozenset[Triangle]:
    if m == 4 and mode is GrowthMode.PLANAR_FACES:
        return frozenset({Triangle(1, 2, 3)})
    return frozenset()


class TrianglePool:
    """Indexable set with O(1) membership, append, and swap-removal."""

    __slots__ = ("_items", "_pos")

    def __init__(self, items: Iterable[Triangle] = ()):
        self._items: list[Triangle] = []
        self._pos: dict[Triangle, int] = {}
        for t in items:
            self.add(t)

    def add(self, t: Triangle) -> None:
        if t not in self._pos:
            self._pos[t] = len(self._items)
            self._items.append(t)

    def remove(self, t: Triangle) -> None:
        i = self._pos.pop(t)
        last = self._items.pop()
        if last != t:
            self._items[i] = last
            self._pos[last] = i

    def __getitem__(self, i: int) -> Triangle:
        return self._items[i]

    def __contains__(self, t: object) -> bool:
        return t in self._pos

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Triangle]:
        return iter(self._items)

    def copy(self) -> "TrianglePool":
        p = TrianglePool()
        p._items = list(self._items)
        p._pos = dict(self._pos)
        return p


def _side_to_split(t: Triangle, on_cycle: Callable[[int, int], bool]) -> Optional[tuple[int, int]]:
    # Sides come out of Triangle.edges() already in lexicographic order.
    for u, w in t.edges():
        if on_cycle(u, w):
            return u, w
    return None


def extend_hamiltonian(cycle: Sequence[int], t: Triangle, v: int) -> Optional[list[int]]:
    """Splice ``v`` into ``cycle`` across the smallest side of ``t`` lying on it.

    Returns None when no side of ``t`` is a cycle edge.
    """
    seq = list(cycle)
    if v in seq:
        raise InvalidParameterError(f"vertex {v} is already on the cycle")
    pos = {x: i for i, x in enumerate(seq)}
    if any(x not in pos for x in t):
        raise InvalidParameterError(f"triangle {tuple(t)} is not covered by the cycle")
    k = len(seq)

    def on_cycle(u: int, w: int) -> bool:
        return (pos[u] - pos[w]) % k in (1, k - 1)

    side = _side_to_split(t, on_cycle)
    if side is None:
        return None
    u, w = side
    first = u if (pos[u] + 1) % k == pos[w] else w
    seq.insert(pos[first] + 1, v)
    return seq


def free_color(colors: Sequence[int], t: Triangle) -> int:
    used = {colors[t.a], colors[t.b], colors[t.c]}
    if len(used) != 3 or not used <= set(COLORS):
        raise InvariantViolation(f"triangle {tuple(t)} is not 3-distinctly colored: {sorted(used)}")
    (missing,) = set(COLORS) - used
    return missing


def extend_coloring(colors: Sequence[int], t: Triangle, v: int) -> list[int]:
    """Return a copy of ``colors`` with vertex ``v`` given the color absent from ``t``."""
    if v != len(colors):
        raise InvalidParameterError(f"new vertex must be {len(colors)}, got {v}")
    return [*colors, free_color(colors, t)]


def wheel_coloring(m: int) -> list[int]:
    """Hub 0, rim alternating 1/2; an odd rim (m even) ends on color 3."""
    colors = [0] + [1 if i % 2 else 2 for i in range(1, m)]
    if m % 2 == 0:
        colors[m - 1] = 3
    return colors


@dataclass
class WragState:
    m: int
    mode: GrowthMode
    graph: SimpleGraph
    choosable: TrianglePool
    chosen: set[Triangle] = field(default_factory=set)
    history: list[Triangle] = field(default_factory=list)
    coloring: list[int] = field(default_factory=list)
    ham_heuristic_failed: bool = False
    rng_seed: Optional[int] = None
    warning: Optional[str] = None
    # Successor map of the maintained Hamiltonian cycle (None once dropped).
    _succ: Optional[dict[int, int]] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def steps(self) -> int:
        return len(self.history)

    @property
    def ham_cycle(self) -> Optional[list[int]]:
        """The maintained cycle as a vertex sequence starting at the hub."""
        if self._succ is None:
            return None
        seq = [0]
        x = self._succ[0]
        while x != 0:
            seq.append(x)
            x = self._succ[x]
        return seq

    def copy(self) -> "WragState":
        return WragState(
            m=self.m,
            mode=self.mode,
            graph=self.graph.copy(),
            choosable=self.choosable.copy(),
            chosen=set(self.chosen),
            history=list(self.history),
            coloring=list(self.coloring),
            ham_heuristic_failed=self.ham_heuristic_failed,
            rng_seed=self.rng_seed,
            warning=self.warning,
            _succ=None if self._succ is None else dict(self._succ),
        )

    def sorted_choosable(self) -> list[Triangle]:
        return sorted(self.choosable)

    def _apply(self, t: Triangle) -> None:
        if t not in self.choosable:
            why = "was already chosen" if t in self.chosen else "is not a choosable triangle"
            raise InvalidChoiceError(f"triangle {tuple(t)} {why}")
        g = self.graph
        v = g.add_vertex()
        for x in t:
            g.add_edge(x, v)
        self.choosable.remove(t)
        self.chosen.add(t)
        for new in (Triangle(t.a, t.b, v), Triangle(t.a, t.c, v), Triangle(t.b, t.c, v)):
            self.choosable.add(new)
        self.history.append(t)
        self.coloring.append(free_color(self.coloring, t))

        succ = self._succ
        if succ is not None:
            side = _side_to_split(t, lambda u, w: succ[u] == w or succ[w] == u)
            if side is None:
                self._succ = None
                self.ham_heuristic_failed = True
            else:
                u, w = side
                first, second = (u, w) if succ[u] == w else (w, u)
                succ[first] = v
                succ[v] = second

    def step_with(self, t: Triangle | Sequence[int]) -> "WragState":
        """New state with a vertex stacked on ``t``; ``self`` is left untouched."""
        t = Triangle.of(*t)
        nxt = self.copy()
        nxt.warning = None
        nxt._apply(t)
        return nxt

    def step_random(self, rng: RngStream) -> "WragState":
        return self.step_with(self.choosable[rng.below(len(self.choosable))])

    def audit(self) -> list[str]:
        """Every broken state invariant, as a human-readable line."""
        from .counting import choosable_count_formula, edge_count_formula

        problems = list(self.graph.audit())
        g = self.graph
        i = self.steps
        if g.vertex_count != self.m + i:
            problems.append(f"vertex count {g.vertex_count} != m + steps = {self.m + i}")
        if g.edge_count != edge_count_formula(self.m, self.m + i):
            problems.append(f"edge count {g.edge_count} != {edge_count_formula(self.m, self.m + i)}")
        pool = set(self.choosable)
        if pool & self.chosen:
            problems.append("choosable and chosen overlap")
        if set(self.history) != self.chosen or len(self.history) != len(self.chosen):
            problems.append("history does not match the chosen set")
        expected_pool = set(enumerate_triangles(g)) - self.chosen - _excluded_seed_triangles(self.m, self.mode)
        if pool != expected_pool:
            problems.append("choosable pool differs from the unchosen triangles of the graph")
        if len(pool) != choosable_count_formula(self.m, i, self.mode):
            problems.append(f"|choosable| {len(pool)} != {choosable_count_formula(self.m, i, self.mode)}")
        if len(self.coloring) != g.vertex_count:
            problems.append("coloring does not cover every vertex")
        elif any(c not in COLORS for c in self.coloring):
            problems.append("coloring uses a color outside 0..3")
        elif any(self.coloring[u] == self.coloring[v] for u, v in g.edges()):
            problems.append("coloring is not proper")
        if self.ham_heuristic_failed != (self._succ is None):
            problems.append("ham_heuristic_failed flag disagrees with the stored cycle")
        elif not self.ham_heuristic_failed and not is_hamiltonian_cycle(g, self.ham_cycle):
            problems.append("maintained cycle is not Hamiltonian")
        return problems


def seed_state(m: int, mode: GrowthMode | str = GrowthMode.ALL_3_CYCLES) -> WragState:
    mode = GrowthMode.parse(mode)
    g = make_wheel(m)
    excluded = _excluded_seed_triangles(m, mode)
    pool = TrianglePool(t for t in enumerate_triangles(g) if t not in excluded)
    succ = {i: (i + 1) % m for i in range(m)}
    return WragState(m=m, mode=mode, graph=g, choosable=pool, coloring=wheel_coloring(m), _succ=succ)


def replay(m: int, history: Iterable[Sequence[int]], mode: GrowthMode | str = GrowthMode.ALL_3_CYCLES) -> WragState:
    """Rebuild a state from its seed order and triangle history."""
    state = seed_state(m, mode)
    for t in history:
        state._apply(Triangle.of(*t))
    return state


def generate(m: int, n: int, rng_seed: int, mode: GrowthMode | str = GrowthMode.ALL_3_CYCLES) -> WragState:
    """Grow ``n - m`` random steps from the order-``m`` wheel.

    ``n == m`` returns the bare wheel with ``warning`` set, since a graph
    with no growth step is a valid sequence member but not a proper WRAG.
    """
    if m < 4:
        raise InvalidParameterError(f"seed order must be >= 4, got {m}")
    if n < m:
        raise InvalidParameterError(f"order n={n} is below the seed order m={m}")
    state = seed_state(m, mode)
    state.rng_seed = rng_seed
    rng = RngStream(rng_seed)
    for _ in range(n - m):
        state._apply(state.choosable[rng.below(len(state.choosable))])
    if n == m:
        state.warning = f"n == m == {m}: no growth step taken, returning the seed wheel"
        warnings.warn(state.warning, stacklevel=2)
    return state
