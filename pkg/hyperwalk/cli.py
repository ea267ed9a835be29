"""Command-line interface for hyperwalk."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

from .config import build_run_config, resolve_graph
from .const import (
    COMMAND_CHECK,
    COMMAND_GEN,
    COMMAND_SIMULATE,
    COMMAND_STRUCTURE,
    CONF_ALL_BASES,
    CONF_BASE,
    CONF_COMMAND,
    CONF_DUMP_MATRICES,
    CONF_GRAPH,
    CONF_MAX_SEQUENCE_LENGTH,
    CONF_OUT_PATH,
    CONF_OUTPUT,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_SEQUENCE,
    CONF_TUPLE_BUDGET,
    CONF_WORKERS,
    DEFAULT_MAX_SEQUENCE_LENGTH,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TUPLE_BUDGET,
    DEFAULT_WORKERS,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_NOT_PRODUCTIVE,
    EXIT_OK,
    EXIT_PRODUCTIVE,
    OUTPUT_HUMAN,
    OUTPUT_JSON,
    RNG_ALGORITHM,
    SCHEMA_VERSION,
    SEED_SPLITTING_RULE,
)
from .coordinator import ProductivityCoordinator, decide_graph_productive
from .exceptions import (
    CrossCheckError,
    EnumerationCapError,
    HyperwalkInputError,
    UnknownGraphFamilyError,
)
from .generators import resolve_builtin
from .graph import format_edge_list
from .matrices import matrices_payload
from .types import RunConfig, Verdict, WalkSpec, format_fraction
from .walks import compare, simulate

_LOGGER = logging.getLogger(__name__)


# Suppress verbose logging from third-party libraries
def _setup_logging(verbose: bool) -> None:
    """Configure the root logger and quiet third-party output."""
    third_party_loggers = [
        "networkx",
        "concurrent.futures",
    ]

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    if _LOGGER.getEffectiveLevel() > logging.DEBUG:
        for logger_name in third_party_loggers:
            logger = logging.getLogger(logger_name)
            logger.setLevel(logging.ERROR)
            logger.propagate = False

    _LOGGER.debug(
        "Configured logging for %d third-party libraries", len(third_party_loggers)
    )


def _parse_sequence(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as err:
        raise argparse.ArgumentTypeError(
            f"jump sequence must look like 1,1,2, got {text!r}"
        ) from err


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit a versioned JSON document",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=argparse.SUPPRESS,
        help="log progress to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="hyperwalk",
        description="Decide hypergroup productivity of pointed graphs exactly.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest=CONF_COMMAND, required=True)

    check = sub.add_parser(
        COMMAND_CHECK, parents=[common], help="decide hypergroup productivity"
    )
    check.add_argument("graph", nargs="+", help="builtin graph name or edge-list file")
    check.add_argument("--base", type=int, help="base point v0")
    check.add_argument(
        "--all-bases",
        action="store_true",
        help="decide productivity at every base point",
    )
    check.add_argument(
        "--dump-matrices",
        action="store_true",
        help="include every matrix in the JSON output",
    )

    structure = sub.add_parser(
        COMMAND_STRUCTURE, parents=[common], help="print the convolution table"
    )
    structure.add_argument("graph", nargs="+")
    structure.add_argument("--base", type=int)

    gen = sub.add_parser(COMMAND_GEN, parents=[common], help="write a builtin graph")
    gen.add_argument("graph", nargs="+", metavar="family", help="e.g. cycle 4")
    gen.add_argument("--out", help="output file (stdout when omitted)")

    sim = sub.add_parser(
        COMMAND_SIMULATE, parents=[common], help="Monte Carlo check of a jump sequence"
    )
    sim.add_argument("graph", nargs="+")
    sim.add_argument("--base", type=int)
    sim.add_argument("--seq", type=_parse_sequence, required=True, help="e.g. 1,1,2")
    sim.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sim.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sim.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    sim.add_argument(
        "--max-seq-length", type=int, default=DEFAULT_MAX_SEQUENCE_LENGTH
    )
    sim.add_argument("--tuple-budget", type=int, default=DEFAULT_TUPLE_BUDGET)
    return parser


def _options(args: argparse.Namespace) -> dict[str, Any]:
    """Map parsed arguments onto CONF_* keys."""
    options: dict[str, Any] = {
        CONF_COMMAND: args.command,
        CONF_GRAPH: list(args.graph),
        CONF_OUTPUT: OUTPUT_JSON if getattr(args, "json", False) else OUTPUT_HUMAN,
    }
    optional = {
        CONF_BASE: "base",
        CONF_ALL_BASES: "all_bases",
        CONF_DUMP_MATRICES: "dump_matrices",
        CONF_OUT_PATH: "out",
        CONF_SEQUENCE: "seq",
        CONF_SAMPLES: "samples",
        CONF_SEED: "seed",
        CONF_WORKERS: "workers",
        CONF_MAX_SEQUENCE_LENGTH: "max_seq_length",
        CONF_TUPLE_BUDGET: "tuple_budget",
    }
    for key, attr in optional.items():
        if hasattr(args, attr):
            options[key] = getattr(args, attr)
    return options


def _emit_json(payload: dict[str, Any], stream: TextIO) -> None:
    stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def format_combination(coefficients: Sequence[Fraction]) -> str:
    """Render Σ c_k x_k with exact coefficients, omitting zero terms."""
    terms = []
    for k, c in enumerate(coefficients):
        if c == 0:
            continue
        terms.append(f"x_{k}" if c == 1 else f"{_short(c)} x_{k}")
    return " + ".join(terms) if terms else "0"


def _short(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else format_fraction(value)


def _yes(value: bool | None) -> str:
    return "n/a" if value is None else ("yes" if value else "no")


def _verdict_lines(verdict: Verdict) -> list[str]:
    methods = verdict.method_results
    symmetry = verdict.symmetry
    lines = [
        f"base point: {verdict.base_point}",
        f"sphere sizes: {' '.join(map(str, verdict.sphere_sizes))}",
        f"classification: {verdict.classification}",
        f"productive: {_yes(verdict.productive)}",
        "methods:",
        f"  brute force            {_yes(methods.brute_force)}",
        f"  D A_k A_l criterion    {_yes(methods.daa_criterion)}",
        f"  A^(k) commutation      {_yes(methods.adjacency_commutation)}",
        f"  P_h D = D A_h          {_yes(methods.pd_equals_da)}",
        (
            f"symmetry: (S1) {_yes(symmetry.s1.holds)}, (S2) {_yes(symmetry.s2.holds)}, "
            f"distance-regular {_yes(symmetry.distance_regular.holds)}"
        ),
    ]
    if symmetry.intersection_array is not None:
        b, c = symmetry.intersection_array
        lines.append(f"intersection array: {{{', '.join(map(str, b))}; {', '.join(map(str, c))}}}")
    for name, result in (
        ("(S1)", symmetry.s1),
        ("(S2)", symmetry.s2),
    ):
        if result.witness is not None:
            lines.append(f"{name} witness: {_witness_text(result.witness)}")
    if verdict.failure_witness is not None:
        lines.append(f"failure: {_witness_text(verdict.failure_witness)}")
    return lines


def _witness_text(witness: Any) -> str:
    values = ", ".join(_short(v) for v in witness.values)
    return f"{witness.kind} at {tuple(witness.indices)}: {values}"


def cmd_check(cfg: RunConfig, stream: TextIO) -> int:
    """Decide productivity and report it.

    Returns:
        0 when productive, 1 otherwise
    """
    pg = resolve_graph(cfg)
    if cfg.all_bases:
        verdicts = decide_graph_productive(pg.graph)
        productive = all(v.productive for v in verdicts.values())
        if cfg.output == OUTPUT_JSON:
            _emit_json(
                {
                    "schema": SCHEMA_VERSION,
                    "graph": " ".join(cfg.graph),
                    "productive": productive,
                    "verdicts": [v.to_payload() for v in verdicts.values()],
                },
                stream,
            )
        else:
            for v0, verdict in verdicts.items():
                stream.write(
                    f"v0={v0}: {verdict.classification}, "
                    f"productive {_yes(verdict.productive)}\n"
                )
            stream.write(f"graph productive: {_yes(productive)}\n")
        return EXIT_PRODUCTIVE if productive else EXIT_NOT_PRODUCTIVE

    coordinator = ProductivityCoordinator(pg, cfg.caps)
    verdict = coordinator.decide()
    if cfg.output == OUTPUT_JSON:
        payload = verdict.to_payload()
        payload["graph"] = " ".join(cfg.graph)
        if cfg.dump_matrices:
            payload["matrices"] = matrices_payload(
                coordinator.adjacency_family,
                coordinator.transition_family,
                coordinator.aggregation_map,
            )
        _emit_json(payload, stream)
    else:
        g = pg.graph
        stream.write(
            f"graph: {' '.join(cfg.graph)} ({g.vertex_count} vertices, "
            f"{g.edge_count} edges)\n"
        )
        stream.write("\n".join(_verdict_lines(verdict)) + "\n")
    return EXIT_PRODUCTIVE if verdict.productive else EXIT_NOT_PRODUCTIVE


def cmd_structure(cfg: RunConfig, stream: TextIO) -> int:
    """Print the convolution table, with the diameter-2 closed form if it applies."""
    pg = resolve_graph(cfg)
    coordinator = ProductivityCoordinator(pg, cfg.caps)
    sc = coordinator.structure_constants
    diam2 = coordinator.diam2()
    products = {
        f"{i},{j}": [format_fraction(c) for c in sc.product(i, j)]
        for i in range(sc.size)
        for j in range(i, sc.size)
    }
    if cfg.output == OUTPUT_JSON:
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "graph": " ".join(cfg.graph),
                "base_point": pg.base_point,
                "sphere_sizes": list(coordinator.profile.sphere_sizes),
                "structure_constants": sc.to_payload(),
                "products": products,
                "diam2": (
                    {"mu1": diam2.mu1, "mu2": diam2.mu2, "m": diam2.m}
                    if diam2 is not None
                    else None
                ),
            },
            stream,
        )
        return EXIT_OK
    for i in range(sc.size):
        for j in range(i, sc.size):
            stream.write(f"x_{i} ∘ x_{j} = {format_combination(sc.product(i, j))}\n")
    if diam2 is not None:
        stream.write(
            f"diameter 2: (mu1, mu2, m) = ({diam2.mu1}, {diam2.mu2}, {diam2.m}), "
            "closed form agrees\n"
        )
    return EXIT_OK


def cmd_gen(cfg: RunConfig, stream: TextIO) -> int:
    """Write a builtin graph in edge-list format."""
    pg = resolve_builtin(cfg.graph)
    if pg is None:
        raise UnknownGraphFamilyError(f"unknown builtin graph {' '.join(cfg.graph)!r}")
    name = " ".join(cfg.graph)
    if cfg.output == OUTPUT_JSON:
        text = json.dumps(
            {
                "schema": SCHEMA_VERSION,
                "graph": name,
                "base_point": pg.base_point,
                "vertex_count": pg.graph.vertex_count,
                "edges": [list(e) for e in pg.graph.edges()],
            },
            indent=2,
        ) + "\n"
    else:
        text = format_edge_list(
            pg.graph, comments=(f"hyperwalk gen {name}", f"base point {pg.base_point}")
        )
    if cfg.out_path:
        Path(cfg.out_path).write_text(text, encoding="utf-8")
        _LOGGER.debug("Wrote %s to %s", name, cfg.out_path)
    else:
        stream.write(text)
    return EXIT_OK


def cmd_simulate(cfg: RunConfig, stream: TextIO) -> int:
    """Simulate a walk and compare it against the exact law.

    Returns:
        0 when every component passes the z-score gate, 1 otherwise
    """
    pg = resolve_graph(cfg)
    spec = WalkSpec(pg, cfg.sequence, cfg.samples, cfg.seed, cfg.workers)
    emp = simulate(spec, cfg.caps)
    report = compare(emp)
    if cfg.output == OUTPUT_JSON:
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "graph": " ".join(cfg.graph),
                "base_point": pg.base_point,
                "sequence": list(cfg.sequence),
                "samples": emp.sample_count,
                "seed": emp.seed,
                "workers": emp.workers,
                "rng": RNG_ALGORITHM,
                "seed_splitting": SEED_SPLITTING_RULE,
                "caps": {
                    "max_sequence_length": cfg.caps.max_sequence_length,
                    "tuple_budget": cfg.caps.tuple_budget,
                },
                "counts": list(emp.counts),
                "reference": [format_fraction(p) for p in emp.reference],
                "z_scores": [
                    z if abs(z) != float("inf") else str(z) for z in report.z_scores
                ],
                "gate": report.gate,
                "suspicious": list(report.suspicious),
                "total_variation": report.total_variation,
                "passed": report.passed,
            },
            stream,
        )
    else:
        stream.write(
            f"{emp.sample_count} walks of {','.join(map(str, cfg.sequence))} from "
            f"v0={pg.base_point}, seed {emp.seed}, {emp.workers} worker(s), "
            f"{RNG_ALGORITHM}\n"
        )
        stream.write("  k      count   estimate      exact        z\n")
        for k, (count, p, exact, z) in enumerate(
            zip(emp.counts, emp.probabilities, emp.reference, report.z_scores, strict=True)
        ):
            stream.write(
                f"{k:>3} {count:>10} {p:>10.6f} {_short(exact):>10} {z:>8.3f}\n"
            )
        stream.write(
            f"total variation {report.total_variation:.6f}; gate |z| <= {report.gate}: "
            f"{'pass' if report.passed else 'FAIL'}\n"
        )
    return EXIT_PRODUCTIVE if report.passed else EXIT_NOT_PRODUCTIVE


COMMAND_HANDLERS = {
    COMMAND_CHECK: cmd_check,
    COMMAND_STRUCTURE: cmd_structure,
    COMMAND_GEN: cmd_gen,
    COMMAND_SIMULATE: cmd_simulate,
}


def main(argv: Sequence[str] | None = None, stream: TextIO | None = None) -> int:
    """Run the command line.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        stream: Output stream (defaults to stdout)

    Returns:
        Process exit code: 0 productive or passing, 1 not productive or
        failing, 2 input error, 3 internal cross-check failure; structure and
        gen return 0 on success
    """
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    _setup_logging(getattr(args, "verbose", False))
    try:
        cfg = build_run_config(_options(args))
        return COMMAND_HANDLERS[cfg.command](cfg, stream)
    except (HyperwalkInputError, EnumerationCapError) as err:
        _LOGGER.debug("Input error", exc_info=True)
        sys.stderr.write(f"hyperwalk: error: {err}\n")
        return EXIT_INPUT_ERROR
    except CrossCheckError as err:
        _LOGGER.debug("Cross-check failed", exc_info=True)
        sys.stderr.write(f"hyperwalk: internal error: {err}\n")
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
