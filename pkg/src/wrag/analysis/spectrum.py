"""Adjacency spectrum by cyclic Jacobi rotations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParameterError, NumericalError, ResourceLimitError
from ..graph import SimpleGraph, adjacency_matrix

DEFAULT_SPECTRUM_CAP = 512
DEFAULT_TOLERANCE = 1e-10
MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: tuple[float, ...]  # ascending
    residual: float  # off-diagonal Frobenius norm when the sweeps stopped
    sweeps: int


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigenvalues(a: np.ndarray, tolerance: float = DEFAULT_TOLERANCE, max_sweeps: int = MAX_SWEEPS) -> SpectrumResult:
    """Eigenvalues of a real symmetric matrix.

    Each sweep visits every upper-triangle pair once and zeroes it with a
    plane rotation; sweeps repeat until the off-diagonal norm is below
    ``tolerance``.
    """
    if tolerance <= 0:
        raise InvalidParameterError("tolerance must be positive")
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n) or not np.array_equal(a, a.T):
        raise InvalidParameterError("matrix must be square and symmetric")

    sweeps = 0
    residual = _off_norm(a)
    while residual >= tolerance:
        if sweeps == max_sweeps:
            raise NumericalError(f"Jacobi sweeps did not converge in {max_sweeps} sweeps", residual)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                tiny = 100.0 * abs(apq)
                if abs(app) + tiny == abs(app) and abs(aqq) + tiny == abs(aqq):
                    # below rounding of both diagonals; a rotation would change nothing
                    a[p, q] = a[q, p] = 0.0
                    continue
                diff = aqq - app
                if abs(diff) + tiny == abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
        residual = _off_norm(a)
    return SpectrumResult(tuple(sorted(float(x) for x in np.diag(a))), residual, sweeps)


def spectrum(g: SimpleGraph, tolerance: float = DEFAULT_TOLERANCE, max_vertices: int = DEFAULT_SPECTRUM_CAP) -> SpectrumResult:
    if g.vertex_count > max_vertices:
        raise ResourceLimitError(f"dense spectrum is capped at {max_vertices} vertices, graph has {g.vertex_count}")
    return jacobi_eigenvalues(adjacency_matrix(g), tolerance)
