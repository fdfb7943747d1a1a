"""Line-oriented verification reports.

Each claim becomes one ``CHECK <name> PASS|FAIL <observed> <expected>``
line. :func:`run_claims` checks the closed-form statements about the
construction against brute force at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .analysis import (
    chromatic_polynomial,
    enumerate_all_histories,
    exact_chromatic_number,
    exact_hamiltonian_search,
    spectrum,
    wheel_chromatic_polynomial_closed_form,
    wheel_cycle_count_closed_form,
)
from .counting import (
    count_closed_form,
    count_histories,
    count_paper_formula,
    edge_count_formula,
    triangle_count_formula,
)
from .graph import count_simple_cycles, diameter, enumerate_triangles, girth, make_wheel
from .state import GrowthMode, generate, replay

# Stacking a vertex on each of the six faces of the triangular bipyramid
# (K4 plus a vertex on its rim) gives the 11-vertex Goldner-Harary graph.
GOLDNER_HARARY_HISTORY = ((1, 2, 3), (0, 1, 2), (0, 2, 3), (0, 1, 3), (1, 2, 4), (2, 3, 4), (1, 3, 4))
EXAMPLE_4_7_HISTORY = ((0, 1, 2), (0, 1, 4), (0, 2, 3))
EXAMPLE_5_9_HISTORY = ((0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4))


def _token(value: object) -> str:
    return str(value).replace(" ", "")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    observed: object
    expected: object

    @classmethod
    def compare(cls, name: str, observed: object, expected: object) -> "Check":
        return cls(name, observed == expected, observed, expected)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {status} {_token(self.observed)} {_token(self.expected)}"


def format_report(checks: Iterable[Check]) -> str:
    return "".join(c.line() + "\n" for c in checks)


def run_claims() -> list[Check]:
    checks: list[Check] = []
    add = checks.append

    for m in range(4, 13):
        w = make_wheel(m)
        add(Check.compare(f"wheel_edges_m{m}", w.edge_count, 2 * (m - 1)))
        add(Check.compare(f"wheel_triangles_m{m}", len(enumerate_triangles(w)), triangle_count_formula(m, 0)))
        add(Check.compare(f"wheel_girth_m{m}", girth(w), 3))
        add(Check.compare(f"wheel_diameter_m{m}", diameter(w), 1 if m == 4 else 2))
    for m in range(4, 9):
        add(Check.compare(f"wheel_cycles_m{m}", count_simple_cycles(make_wheel(m)), wheel_cycle_count_closed_form(m)))
    for m in range(4, 8):
        poly = chromatic_polynomial(make_wheel(m))
        observed = [poly(x) for x in range(7)]
        expected = [wheel_chromatic_polynomial_closed_form(m, x) for x in range(7)]
        add(Check.compare(f"wheel_chromatic_polynomial_m{m}", observed, expected))
    for m in range(4, 10):
        add(Check.compare(f"wheel_chromatic_number_m{m}", exact_chromatic_number(make_wheel(m)), 3 if m % 2 else 4))

    for m in range(4, 11):
        agree = all(count_paper_formula(m, n) == count_closed_form(m, n) for n in range(m + 1, m + 21))
        add(Check.compare(f"literal_product_equals_closed_form_m{m}", agree, True))
    for mode in GrowthMode:
        for m, steps in ((4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2)):
            add(Check.compare(
                f"history_count_{mode.value}_m{m}_s{steps}",
                len(enumerate_all_histories(m, steps, mode)),
                count_histories(m, m + steps, mode),
            ))
    add(Check.compare("literal_product_m5_n6", count_paper_formula(5, 6), 24))
    add(Check.compare("one_step_histories_m5", len(enumerate_all_histories(5, 1)), 4))

    fig1 = replay(4, EXAMPLE_4_7_HISTORY)
    add(Check.compare("example_4_7_edges", fig1.graph.edge_count, edge_count_formula(4, 7)))
    add(Check.compare("example_4_7_triangles", len(enumerate_triangles(fig1.graph)), 3 * 7 - 8))
    fig2 = replay(5, EXAMPLE_5_9_HISTORY)
    add(Check.compare("example_5_9_edges", fig2.graph.edge_count, edge_count_formula(5, 9)))

    for m in range(4, 9):
        bad = 0
        for seed in range(20):
            s = generate(m, m + 30, seed)
            ok = (
                s.graph.edge_count == edge_count_formula(m, m + 30)
                and len(enumerate_triangles(s.graph)) == triangle_count_formula(m, 30)
                and not s.audit()
            )
            bad += not ok
        add(Check.compare(f"random_cardinalities_m{m}", bad, 0))
        g = generate(m, 14, 7).graph
        add(Check.compare(f"random_chromatic_number_m{m}_n14", exact_chromatic_number(g), 4))

    gh = replay(4, GOLDNER_HARARY_HISTORY)
    verdict = exact_hamiltonian_search(gh.graph)
    add(Check.compare("goldner_harary_hamiltonian_cycle", "none" if verdict is None else "found", "none"))

    eig = spectrum(make_wheel(5)).eigenvalues
    target = sorted([1 - math.sqrt(5), -2.0, 0.0, 0.0, 1 + math.sqrt(5)])
    err = max(abs(a - b) for a, b in zip(eig, target))
    add(Check("wheel5_spectrum", err < 1e-8, f"{err:.1e}", "<1e-08"))
    return checks
