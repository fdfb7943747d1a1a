"""Wheel random Apollonian graphs.

Grow stacked triangulations from a wheel seed, keep a Hamiltonian cycle and
a proper 4-coloring up to date along the way, and check the closed-form
counts against exhaustive oracles.
"""

from .counting import (
    choosable_count_formula,
    count_closed_form,
    count_histories,
    count_paper_formula,
    edge_count_formula,
    triangle_count_formula,
)
from .errors import (
    DomainError,
    InvalidChoiceError,
    InvalidParameterError,
    InvariantViolation,
    NumericalError,
    ResourceLimitError,
    WragError,
)
from .graph import (
    SimpleGraph,
    Triangle,
    adjacency_matrix,
    count_simple_cycles,
    diameter,
    enumerate_triangles,
    girth,
    is_hamiltonian_cycle,
    make_wheel,
)
from .rng import RngStream
from .state import (
    GrowthMode,
    WragState,
    extend_coloring,
    extend_hamiltonian,
    generate,
    replay,
    seed_state,
)

__all__ = [
    "DomainError",
    "GrowthMode",
    "InvalidChoiceError",
    "InvalidParameterError",
    "InvariantViolation",
    "NumericalError",
    "ResourceLimitError",
    "RngStream",
    "SimpleGraph",
    "Triangle",
    "WragError",
    "WragState",
    "adjacency_matrix",
    "choosable_count_formula",
    "count_closed_form",
    "count_histories",
    "count_paper_formula",
    "count_simple_cycles",
    "diameter",
    "edge_count_formula",
    "enumerate_triangles",
    "extend_coloring",
    "extend_hamiltonian",
    "generate",
    "girth",
    "is_hamiltonian_cycle",
    "make_wheel",
    "replay",
    "seed_state",
    "triangle_count_formula",
]
