"""Shared test fixtures for hyperwalk tests.

This module provides the named pointed graphs used across the suite so
that every test module builds them the same way.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from hyperwalk.coordinator import ProductivityCoordinator
from hyperwalk.generators import (
    cycle,
    figure2_graph,
    path,
    petersen,
    prism_cayley,
)
from hyperwalk.types import PointedGraph, WildbergerParams

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def load_fixture():
    """Load a fixture file.

    Returns a function that can be called with a filename to load fixtures.
    """

    def _load_fixture(filename: str) -> str:
        """Load a fixture file from the fixtures directory."""
        return (FIXTURES / filename).read_text()

    return _load_fixture


@pytest.fixture
def fixture_path():
    """Return a function resolving a fixture filename to its path."""

    def _fixture_path(filename: str) -> Path:
        return FIXTURES / filename

    return _fixture_path


@pytest.fixture
def cycle4() -> PointedGraph:
    """The 4-cycle pointed at vertex 0."""
    return PointedGraph(cycle(4))


@pytest.fixture
def petersen_graph() -> PointedGraph:
    """The Petersen graph pointed at vertex 0."""
    return PointedGraph(petersen())


@pytest.fixture
def fig2() -> PointedGraph:
    """The 14-vertex (S1)+(S2) graph pointed at its apex."""
    return figure2_graph()


@pytest.fixture
def prism() -> PointedGraph:
    """The triangular prism: (S1) holds, (S2) fails."""
    return prism_cayley()


@pytest.fixture
def path3_end() -> PointedGraph:
    """The path on three vertices pointed at an end vertex."""
    return PointedGraph(path(3), base_point=0)


@pytest.fixture
def coordinator_for():
    """Return a factory building a ProductivityCoordinator."""

    def _coordinator_for(pg: PointedGraph) -> ProductivityCoordinator:
        return ProductivityCoordinator(pg)

    return _coordinator_for


@pytest.fixture
def non_associative_params() -> WildbergerParams:
    """A commutative normalized order-3 structure that is not associative."""
    return WildbergerParams(
        omega1=Fraction(2),
        omega2=Fraction(2),
        alpha1=Fraction(0),
        alpha2=Fraction(1, 4),
        beta1=Fraction(1, 2),
        beta2=Fraction(1, 4),
        gamma1=Fraction(1, 4),
        gamma2=Fraction(3, 4),
    )
