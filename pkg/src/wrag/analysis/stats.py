from __future__ import annotations

from collections import Counter
from typing import Any

from ..graph import SimpleGraph, enumerate_triangles, girth


def summary_stats(g: SimpleGraph) -> dict[str, Any]:
    """Descriptive statistics for one graph instance.

    ``clustering`` is the global (transitivity) coefficient:
    3 * triangles / connected vertex triples.
    """
    degrees = [g.degree(v) for v in g.vertices()]
    triples = sum(d * (d - 1) // 2 for d in degrees)
    triangles = len(enumerate_triangles(g))
    gi = girth(g)
    return {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "triangles": triangles,
        "degree_histogram": dict(sorted(Counter(degrees).items())),
        "min_degree": min(degrees, default=0),
        "max_degree": max(degrees, default=0),
        "mean_degree": (sum(degrees) / len(degrees)) if degrees else 0.0,
        "clustering": (3 * triangles / triples) if triples else 0.0,
        "girth": gi if gi != float("inf") else None,
    }
