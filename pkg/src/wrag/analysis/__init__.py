from .oracles import (
    count_proper_colorings,
    enumerate_all_histories,
    exact_chromatic_number,
    exact_hamiltonian_search,
)
from .polynomial import (
    IntPolynomial,
    chromatic_polynomial,
    wheel_chromatic_polynomial_closed_form,
    wheel_cycle_count_closed_form,
)
from .spectrum import SpectrumResult, jacobi_eigenvalues, spectrum
from .stats import summary_stats

__all__ = [
    "IntPolynomial",
    "SpectrumResult",
    "chromatic_polynomial",
    "count_proper_colorings",
    "enumerate_all_histories",
    "exact_chromatic_number",
    "exact_hamiltonian_search",
    "jacobi_eigenvalues",
    "spectrum",
    "summary_stats",
    "wheel_chromatic_polynomial_closed_form",
    "wheel_cycle_count_closed_form",
]
