"""Tests for run configuration and graph resolution."""

import pytest

from hyperwalk.config import build_run_config, resolve_graph
from hyperwalk.const import (
    CONF_BASE,
    CONF_COMMAND,
    CONF_GRAPH,
    CONF_OUTPUT,
    CONF_SEQUENCE,
    CONF_WORKERS,
    DEFAULT_BASE_POINT,
    DEFAULT_MAX_SEQUENCE_LENGTH,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TUPLE_BUDGET,
    DEFAULT_WORKERS,
    OUTPUT_HUMAN,
)
from hyperwalk.exceptions import (
    GraphParseError,
    GraphValidationError,
    InvalidRunConfigError,
    UnknownGraphFamilyError,
)


def _config(**overrides):
    data = {CONF_COMMAND: "check", CONF_GRAPH: ["petersen"]}
    data.update(overrides)
    return build_run_config(data)


class TestBuildRunConfig:
    """Test option validation."""

    def test_defaults(self):
        """Test omitted options take their defaults."""
        cfg = _config()
        assert cfg.command == "check"
        assert cfg.graph == ("petersen",)
        assert cfg.base_point is None
        assert cfg.output == OUTPUT_HUMAN
        assert cfg.seed == DEFAULT_SEED
        assert cfg.samples == DEFAULT_SAMPLES
        assert cfg.workers == DEFAULT_WORKERS
        assert cfg.sequence == ()
        assert cfg.caps.max_sequence_length == DEFAULT_MAX_SEQUENCE_LENGTH
        assert cfg.caps.tuple_budget == DEFAULT_TUPLE_BUDGET
        assert not cfg.dump_matrices
        assert not cfg.all_bases
        assert cfg.out_path is None

    @pytest.mark.parametrize(
        "overrides",
        [
            {CONF_COMMAND: "draw"},
            {CONF_GRAPH: []},
            {CONF_WORKERS: 0},
            {CONF_WORKERS: 65},
            {CONF_BASE: -1},
            {CONF_OUTPUT: "xml"},
            {CONF_SEQUENCE: [1, -2]},
        ],
    )
    def test_invalid_options(self, overrides):
        """Test out-of-range options are rejected."""
        with pytest.raises(InvalidRunConfigError):
            _config(**overrides)

    def test_simulate_needs_sequence(self):
        """Test simulate without a jump sequence is rejected."""
        with pytest.raises(InvalidRunConfigError, match="jump sequence"):
            _config(**{CONF_COMMAND: "simulate"})

    def test_simulate_sequence(self):
        """Test the sequence is kept as a tuple."""
        cfg = _config(**{CONF_COMMAND: "simulate", CONF_SEQUENCE: [1, 2]})
        assert cfg.sequence == (1, 2)


class TestResolveGraph:
    """Test graph source resolution."""

    def test_builtin(self):
        """Test a builtin name resolves with base point 0."""
        pg = resolve_graph(_config(**{CONF_GRAPH: ["cycle", "6"]}))
        assert pg.graph.vertex_count == 6
        assert pg.base_point == 0

    def test_builtin_keeps_its_base(self):
        """Test the example graph keeps its apex."""
        pg = resolve_graph(_config(**{CONF_GRAPH: ["fig2"]}))
        assert pg.graph.vertex_count == 14
        assert pg.base_point == 0

    def test_base_override(self):
        """Test an explicit base point wins."""
        pg = resolve_graph(_config(**{CONF_GRAPH: ["path", "3"], CONF_BASE: 1}))
        assert pg.base_point == 1

    def test_base_out_of_range(self):
        """Test a base point outside the graph is rejected."""
        with pytest.raises(GraphValidationError):
            resolve_graph(_config(**{CONF_BASE: 10}))

    def test_file(self, fixture_path):
        """Test a single unknown token is read as an edge list."""
        pg = resolve_graph(_config(**{CONF_GRAPH: [str(fixture_path("c4.txt"))]}))
        assert pg.graph.vertex_count == 4
        assert pg.graph.edge_count == 4
        assert pg.base_point == DEFAULT_BASE_POINT

    def test_file_base_override(self, fixture_path):
        """Test --base applies to an edge-list file."""
        pg = resolve_graph(
            _config(**{CONF_GRAPH: [str(fixture_path("prism.txt"))], CONF_BASE: 5})
        )
        assert pg.base_point == 5

    def test_missing_file(self, tmp_path):
        """Test a missing file is a parse error."""
        with pytest.raises(GraphParseError):
            resolve_graph(_config(**{CONF_GRAPH: [str(tmp_path / "none.txt")]}))

    def test_unknown_family(self):
        """Test several tokens naming no builtin are rejected."""
        with pytest.raises(UnknownGraphFamilyError):
            resolve_graph(_config(**{CONF_GRAPH: ["moebius", "8"]}))
