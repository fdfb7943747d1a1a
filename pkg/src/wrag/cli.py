"""Command-line entry point: ``wrag <command> [options]``.

Exit status: 0 success, 1 a verification check failed, 2 usage or input
error, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Optional, Sequence, TextIO

from .analysis import (
    chromatic_polynomial,
    enumerate_all_histories,
    exact_chromatic_number,
    exact_hamiltonian_search,
    spectrum,
    summary_stats,
)
from .analysis.oracles import DEFAULT_ENUM_CAP, DEFAULT_EXACT_CAP
from .counting import count_closed_form, count_histories, count_paper_formula
from .errors import NumericalError, ResourceLimitError, WragError
from .formats import dump_state, load_document, state_from_document, verify_document, write_dot, write_edge_list
from .graph import count_simple_cycles
from .report import format_report, run_claims
from .state import GrowthMode, WragState, generate

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
MAX_SEED = (1 << 64) - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"rng seed must be in [0, 2^64), got {text}")
    return value


def _mode(text: str) -> GrowthMode:
    try:
        return GrowthMode.parse(text)
    except WragError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrag", description="Wheel random Apollonian graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def growth_flags(p: argparse.ArgumentParser, order: bool = True) -> None:
        p.add_argument("--seed-order", type=int, required=True, help="wheel order m (>= 4)")
        if order:
            p.add_argument("--order", type=int, required=True, help="final vertex count n (>= m)")
        p.add_argument("--mode", type=_mode, default=GrowthMode.ALL_3_CYCLES, help="all | planar-faces")

    p = sub.add_parser("generate", help="grow a random instance")
    growth_flags(p)
    p.add_argument("--rng-seed", type=_seed, default=0)
    p.add_argument("--format", choices=("json", "dot", "edges"), default="json")
    p.add_argument("--out", default="-")

    p = sub.add_parser("verify", help="re-derive and check a state file, or check the built-in claims")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--claims", action="store_true", help="run the closed-form claim checks instead")

    p = sub.add_parser("count", help="history counts for (m, n)")
    growth_flags(p)

    p = sub.add_parser("enumerate", help="list every construction history of a given length")
    growth_flags(p, order=False)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("analyze", help="statistics and opt-in exact oracles for a state")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--chromatic", action="store_true")
    p.add_argument("--cycles", action="store_true")
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--max-exact-vertices", type=int, default=DEFAULT_EXACT_CAP)

    p = sub.add_parser("export", help="convert a state file to another format")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--format", choices=("json", "dot", "edges"), default="json")
    p.add_argument("--out", default="-")
    return parser


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str, stdout: TextIO) -> None:
    if path == "-":
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _render(state: WragState, fmt: str) -> str:
    if fmt == "dot":
        return write_dot(state.graph)
    if fmt == "edges":
        return write_edge_list(state.graph)
    return dump_state(state)


def _run_generate(args, stdin, stdout, stderr) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        state = generate(args.seed_order, args.order, args.rng_seed, args.mode)
    if state.warning:
        print(f"warning: {state.warning}", file=stderr)
    _write(args.out, _render(state, args.format), stdout)
    return EXIT_OK


def _run_verify(args, stdin, stdout, stderr) -> int:
    if args.claims:
        checks = run_claims()
    else:
        checks = verify_document(load_document(_read(args.infile, stdin)))
    stdout.write(format_report(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def _run_count(args, stdin, stdout, stderr) -> int:
    m, n = args.seed_order, args.order
    histories = count_histories(m, n, args.mode)
    paper = count_paper_formula(m, n) if n > m else "undefined"
    closed = count_closed_form(m, n) if n > m else "undefined"
    stdout.write(f"paper_formula {paper}\nclosed_form {closed}\nhistories {histories}\n")
    return EXIT_OK


def _run_enumerate(args, stdin, stdout, stderr) -> int:
    states = enumerate_all_histories(args.seed_order, args.steps, args.mode, args.max_enum)
    if args.count_only:
        stdout.write(f"{len(states)}\n")
    else:
        for s in states:
            stdout.write(json.dumps([list(t) for t in s.history], separators=(",", ":")) + "\n")
    return EXIT_OK


def _run_analyze(args, stdin, stdout, stderr) -> int:
    state = state_from_document(load_document(_read(args.infile, stdin)))
    g = state.graph
    cap = args.max_exact_vertices
    report = {"stats": summary_stats(g)}
    if args.spectrum:
        result = spectrum(g)
        report["spectrum"] = {"eigenvalues": list(result.eigenvalues), "residual": result.residual}
    if args.chromatic:
        report["chromatic_number"] = exact_chromatic_number(g, k_max=4, max_vertices=cap)
        report["chromatic_polynomial"] = [str(c) for c in chromatic_polynomial(g, max_vertices=min(cap, 12)).coefficients]
    if args.cycles:
        report["simple_cycles"] = count_simple_cycles(g, max_vertices=min(cap, 12))
    if args.hamiltonian:
        report["hamiltonian_cycle"] = exact_hamiltonian_search(g, max_vertices=cap)
        report["heuristic_cycle"] = state.ham_cycle
    stdout.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    return EXIT_OK


def _run_export(args, stdin, stdout, stderr) -> int:
    state = state_from_document(load_document(_read(args.infile, stdin)))
    _write(args.out, _render(state, args.format), stdout)
    return EXIT_OK


COMMANDS = {
    "generate": _run_generate,
    "verify": _run_verify,
    "count": _run_count,
    "enumerate": _run_enumerate,
    "analyze": _run_analyze,
    "export": _run_export,
}


def run(
    argv: Sequence[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return COMMANDS[args.command](args, stdin, stdout, stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except NumericalError as exc:
        print(f"error: numerical: {exc}", file=stderr)
        return EXIT_CHECK_FAILED
    except (WragError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed input: {exc!r}", file=stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
