"""Chromatic polynomials by deletion-contraction, and the wheel closed forms."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import zip_longest

from ..errors import InvalidParameterError, ResourceLimitError
from ..graph import SimpleGraph

DEFAULT_POLYNOMIAL_CAP = 12


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coefficients[k]`` multiplies x^k. Trailing zeros are stripped."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, k: int) -> "IntPolynomial":
        return cls((0,) * k + (1,))

    @classmethod
    def falling_factorial(cls, k: int) -> "IntPolynomial":
        """x (x-1) ... (x-k+1)."""
        p = cls((1,))
        for j in range(k):
            p = p * cls((-j, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_json(self) -> str:
        """Degree-ascending array of decimal strings."""
        return json.dumps([str(c) for c in self.coefficients])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(tuple(int(c) for c in json.loads(text)))


def _canonical(vertices: tuple[int, ...], edges: frozenset) -> tuple[int, frozenset]:
    index = {v: i for i, v in enumerate(vertices)}
    return len(vertices), frozenset((index[u], index[v]) for u, v in edges)


def chromatic_polynomial(g: SimpleGraph, max_vertices: int = DEFAULT_POLYNOMIAL_CAP) -> IntPolynomial:
    """P(G) = P(G - e) - P(G / e) on the lexicographically smallest edge.

    Contraction merges the larger endpoint into the smaller and collapses the
    resulting parallel edges, so every intermediate graph stays simple.
    Subgraphs are memoised after relabeling to 0..k-1.
    """
    if g.vertex_count > max_vertices:
        raise ResourceLimitError(
            f"chromatic polynomial is capped at {max_vertices} vertices, graph has {g.vertex_count}"
        )
    memo: dict[tuple[int, frozenset], IntPolynomial] = {}

    def solve(n: int, edges: frozenset) -> IntPolynomial:
        key = (n, edges)
        if key in memo:
            return memo[key]
        if not edges:
            result = IntPolynomial.monomial(n)
        elif len(edges) == n * (n - 1) // 2:
            result = IntPolynomial.falling_factorial(n)
        else:
            u, v = min(edges)
            deleted = solve(n, edges - {(u, v)})
            merged = set()
            for a, b in edges:
                a = u if a == v else a
                b = u if b == v else b
                if a != b:
                    merged.add((min(a, b), max(a, b)))
            rest = tuple(x for x in range(n) if x != v)
            result = deleted - solve(*_canonical(rest, frozenset(merged)))
        memo[key] = result
        return result

    return solve(g.vertex_count, frozenset(g.edges()))


def wheel_chromatic_polynomial_closed_form(m: int, x: int) -> int:
    """x((x-2)^(m-1) - (-1)^m (x-2)) for the order-m wheel."""
    if m < 4:
        raise InvalidParameterError(f"wheel order must be >= 4, got {m}")
    return x * ((x - 2) ** (m - 1) - (-1) ** m * (x - 2))


def wheel_cycle_count_closed_form(m: int) -> int:
    if m < 4:
        raise InvalidParameterError(f"wheel order must be >= 4, got {m}")
    return m * m - 3 * m + 3
