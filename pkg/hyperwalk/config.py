"""Run configuration validation and graph source resolution."""

from __future__ import annotations

import logging
from typing import Any

import voluptuous as vol

from .const import (
    COMMAND_SIMULATE,
    COMMANDS,
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
    DEFAULT_BASE_POINT,
    DEFAULT_MAX_SEQUENCE_LENGTH,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TUPLE_BUDGET,
    DEFAULT_WORKERS,
    MAX_WORKERS,
    OUTPUT_HUMAN,
    OUTPUT_JSON,
)
from .exceptions import InvalidRunConfigError, UnknownGraphFamilyError
from .generators import resolve_builtin
from .graph import read_edge_list
from .types import EnumerationCaps, PointedGraph, RunConfig

_LOGGER = logging.getLogger(__name__)

_NON_NEGATIVE = vol.All(int, vol.Range(min=0))
_POSITIVE = vol.All(int, vol.Range(min=1))

RUN_CONFIG_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_COMMAND): vol.In(COMMANDS),
        vol.Required(CONF_GRAPH): vol.All([str], vol.Length(min=1)),
        vol.Optional(CONF_BASE, default=None): vol.Any(None, _NON_NEGATIVE),
        vol.Optional(CONF_OUTPUT, default=OUTPUT_HUMAN): vol.In(
            (OUTPUT_HUMAN, OUTPUT_JSON)
        ),
        vol.Optional(CONF_SEED, default=DEFAULT_SEED): vol.All(
            int, vol.Range(min=0, max=2**64 - 1)
        ),
        vol.Optional(CONF_SAMPLES, default=DEFAULT_SAMPLES): _POSITIVE,
        vol.Optional(CONF_WORKERS, default=DEFAULT_WORKERS): vol.All(
            int, vol.Range(min=1, max=MAX_WORKERS)
        ),
        vol.Optional(CONF_SEQUENCE, default=list): [_NON_NEGATIVE],
        vol.Optional(
            CONF_MAX_SEQUENCE_LENGTH, default=DEFAULT_MAX_SEQUENCE_LENGTH
        ): _POSITIVE,
        vol.Optional(CONF_TUPLE_BUDGET, default=DEFAULT_TUPLE_BUDGET): _POSITIVE,
        vol.Optional(CONF_DUMP_MATRICES, default=False): bool,
        vol.Optional(CONF_ALL_BASES, default=False): bool,
        vol.Optional(CONF_OUT_PATH, default=None): vol.Any(None, str),
    }
)


def build_run_config(data: dict[str, Any]) -> RunConfig:
    """Validate raw options into a RunConfig.

    Args:
        data: Options keyed by the CONF_* names

    Returns:
        The validated configuration

    Raises:
        InvalidRunConfigError: If validation fails
    """
    try:
        valid = RUN_CONFIG_SCHEMA(data)
    except vol.Invalid as err:
        raise InvalidRunConfigError(f"invalid run configuration: {err}") from err
    if valid[CONF_COMMAND] == COMMAND_SIMULATE and not valid[CONF_SEQUENCE]:
        raise InvalidRunConfigError("simulate needs a non-empty jump sequence")
    return RunConfig(
        command=valid[CONF_COMMAND],
        graph=tuple(valid[CONF_GRAPH]),
        base_point=valid[CONF_BASE],
        output=valid[CONF_OUTPUT],
        seed=valid[CONF_SEED],
        samples=valid[CONF_SAMPLES],
        workers=valid[CONF_WORKERS],
        sequence=tuple(valid[CONF_SEQUENCE]),
        caps=EnumerationCaps(
            max_sequence_length=valid[CONF_MAX_SEQUENCE_LENGTH],
            tuple_budget=valid[CONF_TUPLE_BUDGET],
        ),
        dump_matrices=valid[CONF_DUMP_MATRICES],
        all_bases=valid[CONF_ALL_BASES],
        out_path=valid[CONF_OUT_PATH],
    )


def resolve_graph(cfg: RunConfig) -> PointedGraph:
    """Resolve the graph source of a run, builtin names first.

    Raises:
        UnknownGraphFamilyError: If several tokens name no builtin graph
        GraphParseError: If the edge-list file cannot be read or parsed
        GraphValidationError: If the base point is not a vertex
    """
    builtin = resolve_builtin(cfg.graph)
    if builtin is None:
        if len(cfg.graph) != 1:
            raise UnknownGraphFamilyError(
                f"unknown builtin graph {' '.join(cfg.graph)!r}"
            )
        graph = read_edge_list(cfg.graph[0])
        base = DEFAULT_BASE_POINT
        _LOGGER.debug("Loaded %s: %d vertices", cfg.graph[0], graph.vertex_count)
    else:
        graph, base = builtin.graph, builtin.base_point
    if cfg.base_point is not None:
        base = cfg.base_point
    return PointedGraph(graph, base)
