"""Exact hypergroup productivity checks for pointed graphs."""

from __future__ import annotations

import logging

from .coordinator import (
    ProductivityCoordinator,
    decide_graph_productive,
    decide_productive,
)
from .exceptions import HyperwalkError, HyperwalkInputError
from .types import Graph, PointedGraph, Verdict

__version__ = "0.1.0"

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())

__all__ = [
    "Graph",
    "HyperwalkError",
    "HyperwalkInputError",
    "PointedGraph",
    "ProductivityCoordinator",
    "Verdict",
    "decide_graph_productive",
    "decide_productive",
]
