"""Constants for the hyperwalk toolkit."""

from __future__ import annotations

from typing import Final

# JSON output schema version, emitted as the top-level "schema" field
SCHEMA_VERSION: Final = "1"

CONF_COMMAND: Final = "command"
CONF_GRAPH: Final = "graph"
CONF_BASE: Final = "base"
CONF_OUTPUT: Final = "output"
CONF_SEED: Final = "seed"
CONF_SAMPLES: Final = "samples"
CONF_WORKERS: Final = "workers"
CONF_SEQUENCE: Final = "sequence"
CONF_MAX_SEQUENCE_LENGTH: Final = "max_sequence_length"
CONF_TUPLE_BUDGET: Final = "tuple_budget"
CONF_DUMP_MATRICES: Final = "dump_matrices"
CONF_ALL_BASES: Final = "all_bases"
CONF_OUT_PATH: Final = "out"

COMMAND_CHECK: Final = "check"
COMMAND_STRUCTURE: Final = "structure"
COMMAND_GEN: Final = "gen"
COMMAND_SIMULATE: Final = "simulate"
COMMANDS: Final = (COMMAND_CHECK, COMMAND_STRUCTURE, COMMAND_GEN, COMMAND_SIMULATE)

OUTPUT_HUMAN: Final = "human"
OUTPUT_JSON: Final = "json"

DEFAULT_BASE_POINT: Final = 0
DEFAULT_SEED: Final = 42
DEFAULT_SAMPLES: Final = 100_000
DEFAULT_WORKERS: Final = 1
MAX_WORKERS: Final = 64

# Nested-sum enumeration guard for multi-step coefficients
DEFAULT_MAX_SEQUENCE_LENGTH: Final = 5
DEFAULT_TUPLE_BUDGET: Final = 10**8

# Per-component Monte Carlo gate (|z| above this is suspicious)
Z_SCORE_GATE: Final = 4.0

RNG_ALGORITHM: Final = "PCG64"
SEED_SPLITTING_RULE: Final = "numpy.random.SeedSequence(seed).spawn(workers)"

# Exit codes are a stable contract
EXIT_OK: Final = 0
EXIT_PRODUCTIVE: Final = 0
EXIT_NOT_PRODUCTIVE: Final = 1
EXIT_INPUT_ERROR: Final = 2
EXIT_INTERNAL_ERROR: Final = 3

PLATONIC_SOLIDS: Final = (
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
)

FAMILY_PETERSEN: Final = "petersen"
FAMILY_FIG2: Final = "fig2"
FAMILY_PRISM: Final = "prism"
FAMILY_PATH: Final = "path"
FAMILY_CYCLE: Final = "cycle"
FAMILY_COMPLETE: Final = "complete"
FAMILY_HYPERCUBE: Final = "hypercube"
FAMILY_PLATONIC: Final = "platonic"
FAMILY_CAYLEY: Final = "cayley"

# Edge-list comment marker
EDGE_LIST_COMMENT: Final = "#"
