import math
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wrag import (
    GrowthMode,
    InvalidParameterError,
    NumericalError,
    ResourceLimitError,
    SimpleGraph,
    count_histories,
    generate,
    is_hamiltonian_cycle,
    make_wheel,
    replay,
    seed_state,
)
from wrag.analysis import (
    IntPolynomial,
    chromatic_polynomial,
    count_proper_colorings,
    enumerate_all_histories,
    exact_chromatic_number,
    exact_hamiltonian_search,
    jacobi_eigenvalues,
    spectrum,
    summary_stats,
    wheel_chromatic_polynomial_closed_form,
    wheel_cycle_count_closed_form,
)
from wrag.report import GOLDNER_HARARY_HISTORY

ALL = GrowthMode.ALL_3_CYCLES
PLANAR = GrowthMode.PLANAR_FACES


def triangle_graph():
    return SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])


def path_graph(n):
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def brute_hamiltonian(g):
    n = g.vertex_count
    for perm in permutations(range(1, n)):
        seq = (0, *perm)
        if all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n)):
            return True
    return False


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, edges)


class TestEnumeration:
    def test_one_step_w5(self):
        states = enumerate_all_histories(5, 1)
        assert [s.history[0] for s in states] == sorted(seed_state(5).choosable)

    def test_two_steps_w5_distinct(self):
        states = enumerate_all_histories(5, 2)
        assert len(states) == 24
        assert len({tuple(s.graph.edges()) for s in states}) == 24
        assert [s.history for s in states] == sorted(s.history for s in states)

    def test_k4_modes(self):
        assert len(enumerate_all_histories(4, 1, ALL)) == 4
        assert len(enumerate_all_histories(4, 1, PLANAR)) == 3

    @pytest.mark.parametrize("m", [4, 5, 6])
    @pytest.mark.parametrize("mode", list(GrowthMode))
    def test_matches_count(self, m, mode):
        for steps in range(0, 5 if m < 6 else 4):
            states = enumerate_all_histories(m, steps, mode)
            assert len(states) == count_histories(m, m + steps, mode)
            assert all(not s.audit() for s in states)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            enumerate_all_histories(5, 3, max_count=100)
        with pytest.raises(InvalidParameterError):
            enumerate_all_histories(5, -1)


class TestHamiltonianSearch:
    @pytest.mark.parametrize("m", range(4, 11))
    def test_wheels(self, m):
        cycle = exact_hamiltonian_search(make_wheel(m))
        assert cycle is not None and is_hamiltonian_cycle(make_wheel(m), cycle)

    def test_path(self):
        assert exact_hamiltonian_search(path_graph(4)) is None
        assert exact_hamiltonian_search(SimpleGraph(2, [(0, 1)])) is None

    def test_goldner_harary(self):
        g = replay(4, GOLDNER_HARARY_HISTORY).graph
        assert (g.vertex_count, g.edge_count) == (11, 27)
        assert exact_hamiltonian_search(g) is None

    @given(small_graphs(max_n=8))
    @settings(max_examples=150, deadline=None)
    def test_matches_permutation_scan(self, g):
        cycle = exact_hamiltonian_search(g)
        assert (cycle is not None) == (g.vertex_count >= 3 and brute_hamiltonian(g))
        if cycle is not None:
            assert is_hamiltonian_cycle(g, cycle)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            exact_hamiltonian_search(make_wheel(17))


class TestChromaticNumber:
    @pytest.mark.parametrize("m", range(4, 10))
    def test_wheels(self, m):
        assert exact_chromatic_number(make_wheel(m)) == (3 if m % 2 else 4)

    def test_small(self):
        assert exact_chromatic_number(SimpleGraph(2, [(0, 1)])) == 2
        assert exact_chromatic_number(SimpleGraph(3)) == 1
        assert exact_chromatic_number(SimpleGraph(0)) == 0

    def test_exceeds(self):
        k5 = SimpleGraph(5, combinations(range(5), 2))
        assert exact_chromatic_number(k5, k_max=4) is None
        assert exact_chromatic_number(k5, k_max=5) == 5

    @given(small_graphs())
    @settings(max_examples=100, deadline=None)
    def test_matches_exhaustive(self, g):
        expected = next(k for k in range(0, 8) if k >= 1 and count_proper_colorings(g, k) > 0)
        assert exact_chromatic_number(g, k_max=7) == expected

    def test_generated(self):
        for seed in range(10):
            assert exact_chromatic_number(generate(5, 12, seed).graph) == 4


class TestChromaticPolynomial:
    def test_triangle(self):
        assert chromatic_polynomial(triangle_graph()) == IntPolynomial((0, 2, -3, 1))

    def test_wheel_values(self):
        assert chromatic_polynomial(make_wheel(4))(4) == 24
        assert chromatic_polynomial(make_wheel(6))(3) == 0

    @pytest.mark.parametrize("m", range(4, 8))
    def test_wheel_closed_form(self, m):
        poly = chromatic_polynomial(make_wheel(m))
        assert all(poly(x) == wheel_chromatic_polynomial_closed_form(m, x) for x in range(7))

    def test_structure(self):
        for g in (make_wheel(6), generate(4, 9, 3).graph, path_graph(5)):
            c = chromatic_polynomial(g).coefficients
            n = g.vertex_count
            assert len(c) == n + 1 and c[-1] == 1 and c[0] == 0
            assert all(c[k] * (-1) ** (n - k) >= 0 for k in range(n + 1))

    @given(small_graphs())
    @settings(max_examples=100, deadline=None)
    def test_matches_exhaustive_counter(self, g):
        poly = chromatic_polynomial(g)
        assert all(poly(k) == count_proper_colorings(g, k) for k in range(5))

    def test_twelve_vertex_wheel(self):
        poly = chromatic_polynomial(make_wheel(12))
        assert poly(5) == wheel_chromatic_polynomial_closed_form(12, 5)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            chromatic_polynomial(make_wheel(13))

    def test_json_roundtrip(self):
        poly = chromatic_polynomial(make_wheel(5))
        text = poly.to_json()
        assert text.startswith('["0"')
        assert IntPolynomial.from_json(text) == poly


class TestClosedForms:
    @pytest.mark.parametrize("m,x,expected", [(4, 4, 24), (5, 3, 6), (9, 0, 0), (5, 0, 0)])
    def test_wheel_polynomial(self, m, x, expected):
        assert wheel_chromatic_polynomial_closed_form(m, x) == expected

    @pytest.mark.parametrize("m,expected", [(4, 7), (5, 13), (8, 43)])
    def test_wheel_cycles(self, m, expected):
        assert wheel_cycle_count_closed_form(m) == expected

    def test_invalid(self):
        with pytest.raises(InvalidParameterError):
            wheel_cycle_count_closed_form(3)


class TestSpectrum:
    def test_k4(self):
        eig = spectrum(make_wheel(4)).eigenvalues
        assert np.allclose(eig, [-1, -1, -1, 3], atol=1e-9)

    def test_w5(self):
        eig = spectrum(make_wheel(5)).eigenvalues
        expected = sorted([1 - math.sqrt(5), -2, 0, 0, 1 + math.sqrt(5)])
        assert np.allclose(eig, expected, atol=1e-9, rtol=0)

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_lapack(self, seed):
        g = generate(5, 30, seed).graph
        result = spectrum(g)
        assert result.residual < 1e-10
        ref = np.linalg.eigvalsh(np.array([[float(g.has_edge(i, j)) for j in range(30)] for i in range(30)]))
        assert np.allclose(result.eigenvalues, ref, atol=1e-9, rtol=0)
        assert abs(sum(result.eigenvalues)) < 1e-9
        assert abs(sum(x * x for x in result.eigenvalues) - 2 * g.edge_count) < 1e-9

    def test_non_convergence(self):
        with pytest.raises(NumericalError) as info:
            jacobi_eigenvalues(np.ones((6, 6)) - np.eye(6), tolerance=1e-12, max_sweeps=0)
        assert info.value.residual > 0

    def test_rejects_asymmetric(self):
        with pytest.raises(InvalidParameterError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            spectrum(make_wheel(10), max_vertices=9)


class TestStats:
    def test_example_4_7(self, example_4_7_graph):
        stats = summary_stats(example_4_7_graph)
        assert stats["edges"] == 15
        assert stats["degree_histogram"] == {3: 2, 4: 2, 5: 2, 6: 1}
        assert stats["girth"] == 3

    @pytest.mark.parametrize("m", [4, 7])
    def test_wheel(self, m):
        stats = summary_stats(make_wheel(m))
        assert stats["max_degree"] == m - 1
        assert stats["degree_histogram"][3] == (m - 1 if m > 4 else 4)

    def test_k4_clustering(self):
        assert summary_stats(make_wheel(4))["clustering"] == 1.0

    def test_handshake(self):
        for seed in range(5):
            g = generate(6, 40, seed).graph
            stats = summary_stats(g)
            total = sum(d * c for d, c in stats["degree_histogram"].items())
            assert total == 2 * stats["edges"]
