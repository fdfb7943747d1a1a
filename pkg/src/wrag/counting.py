"""Closed-form cardinalities of the growth process, in exact integer arithmetic."""

from __future__ import annotations

from math import prod

from .errors import InvalidParameterError
from .state import GrowthMode


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameterError(message)


def triangle_count_formula(m: int, i: int) -> int:
    """Number of 3-cycles after ``i`` steps from the order-``m`` wheel.

    The seed K4 (m = 4) has one extra triangle, its rim.
    """
    _require(m >= 4 and i >= 0, f"need m >= 4 and i >= 0, got m={m}, i={i}")
    return (m if m == 4 else m - 1) + 3 * i


def edge_count_formula(m: int, n: int) -> int:
    _require(4 <= m <= n, f"need 4 <= m <= n, got m={m}, n={n}")
    return 3 * n - m - 2


def choosable_count_formula(m: int, i: int, mode: GrowthMode = GrowthMode.ALL_3_CYCLES) -> int:
    _require(m >= 4 and i >= 0, f"need m >= 4 and i >= 0, got m={m}, i={i}")
    base = m if (m == 4 and GrowthMode(mode) is GrowthMode.ALL_3_CYCLES) else m - 1
    return base + 2 * i


def count_paper_formula(m: int, n: int) -> int:
    """prod_{i=0}^{n-m} (m - 1 + 2i), with the upper index taken literally.

    This runs one factor past the last step actually taken; see
    :func:`count_histories` for the number of construction histories.
    """
    _require(4 <= m < n, f"need 4 <= m < n, got m={m}, n={n}")
    return prod(m - 1 + 2 * i for i in range(n - m + 1))


def count_histories(m: int, n: int, mode: GrowthMode = GrowthMode.ALL_3_CYCLES) -> int:
    """Number of distinct labeled construction histories reaching order ``n``."""
    _require(4 <= m <= n, f"need 4 <= m <= n, got m={m}, n={n}")
    return prod(choosable_count_formula(m, i, mode) for i in range(n - m))


def count_closed_form(m: int, n: int) -> int:
    """(m-1) * 2^(n-m) * ((m+1)/2)_(n-m), expanded term by term.

    Each factor 2 * ((m+1)/2 + i) is the integer m + 1 + 2i, so the rising
    factorial never leaves the integers. The equivalent Gamma-ratio form
    2^(n-m+1) * Gamma(n - m/2 + 1/2) / Gamma(m/2 - 1/2) has half-integer
    arguments and is deliberately not evaluated.
    """
    _require(4 <= m < n, f"need 4 <= m < n, got m={m}, n={n}")
    return (m - 1) * prod(m + 1 + 2 * i for i in range(n - m))
