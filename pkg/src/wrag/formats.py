"""Text serializations: edge list, DOT, and the state JSON document.

All writers are byte-deterministic for identical inputs.
"""

from __future__ import annotations

import json
import re
from typing import Any, Optional

from .counting import edge_count_formula, triangle_count_formula
from .errors import InvalidParameterError, WragError
from .graph import SimpleGraph, enumerate_triangles, girth, is_hamiltonian_cycle
from .report import Check
from .state import GrowthMode, WragState, replay

STATE_FIELDS = ("m", "n", "mode", "rng_seed", "history", "edges", "coloring", "ham_cycle", "ham_heuristic_failed")


def write_edge_list(g: SimpleGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def read_edge_list(text: str, vertex_count: Optional[int] = None) -> SimpleGraph:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParameterError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    n = vertex_count if vertex_count is not None else 1 + max((max(p) for p in pairs), default=-1)
    return SimpleGraph(n, pairs)


def write_dot(g: SimpleGraph, name: str = "wrag") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices()]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")


def read_dot(text: str) -> SimpleGraph:
    """Parse the subset of DOT produced by :func:`write_dot`."""
    nodes: set[int] = set()
    pairs = []
    for line in text.splitlines():
        if em := _DOT_EDGE.match(line):
            u, v = int(em.group(1)), int(em.group(2))
            pairs.append((u, v))
            nodes.update((u, v))
        elif nm := _DOT_NODE.match(line):
            nodes.add(int(nm.group(1)))
    return SimpleGraph(1 + max(nodes, default=-1), pairs)


def state_document(state: WragState) -> dict[str, Any]:
    return {
        "m": state.m,
        "n": state.n,
        "mode": state.mode.value,
        "rng_seed": state.rng_seed,
        "history": [list(t) for t in state.history],
        "edges": [list(e) for e in state.graph.edges()],
        "coloring": list(state.coloring),
        "ham_cycle": state.ham_cycle,
        "ham_heuristic_failed": state.ham_heuristic_failed,
    }


def dump_document(doc: dict[str, Any]) -> str:
    """One field per line in the fixed field order; values compact."""
    body = ",\n".join(f"  {json.dumps(key)}: {json.dumps(doc[key], separators=(',', ':'))}" for key in STATE_FIELDS)
    return "{\n" + body + "\n}\n"


def dump_state(state: WragState) -> str:
    return dump_document(state_document(state))


def load_document(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"state file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InvalidParameterError("state file must hold a JSON object")
    missing = [k for k in ("m", "mode", "history") if k not in doc]
    if missing:
        raise InvalidParameterError(f"state file lacks required fields: {', '.join(missing)}")
    return doc


def state_from_document(doc: dict[str, Any]) -> WragState:
    """Rebuild from (m, mode, history); every other field is re-derived, not trusted."""
    try:
        history = [tuple(int(x) for x in t) for t in doc["history"]]
    except (TypeError, ValueError):
        raise InvalidParameterError("history must be an array of integer triples") from None
    state = replay(int(doc["m"]), history, GrowthMode.parse(doc["mode"]))
    state.rng_seed = doc.get("rng_seed")
    return state


def load_state(text: str) -> WragState:
    return state_from_document(load_document(text))


def verify_document(doc: dict[str, Any]) -> list[Check]:
    """Compare every stored field of a state document with its re-derivation."""
    checks: list[Check] = []
    add = checks.append
    try:
        rebuilt: Optional[WragState] = state_from_document(doc)
        add(Check("history_replay", True, "valid", "valid"))
    except WragError as exc:
        rebuilt = None
        add(Check("history_replay", False, type(exc).__name__, "valid"))

    m = int(doc["m"])
    steps = len(doc["history"])
    n = doc.get("n")
    add(Check.compare("vertex_count", n, m + steps))
    coloring = doc.get("coloring") or []
    add(Check.compare("coloring_length", len(coloring), m + steps))

    raw_edges = doc.get("edges") or []
    add(Check.compare("edge_count", len(raw_edges), edge_count_formula(m, m + steps)))
    try:
        g = SimpleGraph(m + steps, (tuple(e) for e in raw_edges))
        wellformed = len(raw_edges) == g.edge_count
    except (InvalidParameterError, TypeError, ValueError):
        g, wellformed = None, False
    add(Check("edges_wellformed", wellformed, "yes" if wellformed else "no", "yes"))
    if rebuilt is not None:
        same = g is not None and g == rebuilt.graph
        add(Check("edge_set", same, "match" if same else "mismatch", "match"))

    if g is not None:
        add(Check.compare("triangle_count", len(enumerate_triangles(g)), triangle_count_formula(m, steps)))
        add(Check.compare("girth", girth(g), 3))
        proper = len(coloring) == g.vertex_count and all(
            coloring[u] != coloring[v] for u, v in g.edges()
        )
        add(Check("coloring_proper", proper, "proper" if proper else "improper", "proper"))
        colors_ok = all(c in (0, 1, 2, 3) for c in coloring)
        add(Check("coloring_palette", colors_ok, "0-3" if colors_ok else "out-of-range", "0-3"))

    failed = doc.get("ham_heuristic_failed")
    cycle = doc.get("ham_cycle")
    if rebuilt is not None:
        add(Check.compare("coloring_matches", coloring == rebuilt.coloring, True))
        add(Check.compare("ham_heuristic_failed", failed, rebuilt.ham_heuristic_failed))
        add(Check.compare("ham_cycle_matches", cycle == rebuilt.ham_cycle, True))
    if g is not None and not failed:
        valid = cycle is not None and is_hamiltonian_cycle(g, cycle)
        add(Check("ham_cycle_valid", valid, "valid" if valid else "invalid", "valid"))
    return checks
