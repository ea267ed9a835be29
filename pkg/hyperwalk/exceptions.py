"""Exceptions for the hyperwalk toolkit."""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .types import Witness


class HyperwalkError(Exception):
    """Base exception for all hyperwalk errors."""


class HyperwalkInputError(HyperwalkError):
    """Exception raised when user input (a graph or a configuration) is unusable."""


class GraphParseError(HyperwalkInputError):
    """Exception raised when an edge-list document cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        """Initialize parse error.

        Args:
            message: Error message
            line_number: 1-based line of the offending input, if known
        """
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class GraphValidationError(HyperwalkInputError):
    """Exception raised when a graph violates a structural assumption."""


class DisconnectedGraphError(GraphValidationError):
    """Exception raised when a graph is not connected."""

    def __init__(self, unreached: Iterable[int]) -> None:
        """Initialize disconnected graph error.

        Args:
            unreached: Vertices not reachable from vertex 0
        """
        self.unreached = frozenset(unreached)
        preview = sorted(self.unreached)[:10]
        super().__init__(
            f"graph is disconnected: {len(self.unreached)} vertices unreachable "
            f"from vertex 0 (first: {preview})"
        )


class NotSelfCenteredError(HyperwalkInputError):
    """Exception raised when the structure constants are undefined."""


class SphereEmptyError(NotSelfCenteredError):
    """Exception raised when a sphere needed by a computation is empty."""

    def __init__(self, vertex: int, radius: int) -> None:
        """Initialize sphere error.

        Args:
            vertex: Centre of the empty sphere
            radius: Radius of the empty sphere
        """
        super().__init__(
            f"sphere S_{radius}({vertex}) is empty; the graph is not "
            "self-centered enough for this base point"
        )
        self.vertex = vertex
        self.radius = radius


class InvalidCayleySpecError(HyperwalkInputError):
    """Exception raised when a Cayley graph specification is invalid."""


class UnknownGraphFamilyError(HyperwalkInputError):
    """Exception raised when a builtin graph name cannot be resolved."""


class InvalidParametersError(HyperwalkInputError):
    """Exception raised when numeric parameters fall outside their range."""


class InvalidRunConfigError(HyperwalkInputError):
    """Exception raised when a run configuration fails validation."""


class PreconditionError(HyperwalkError):
    """Exception raised when an operation is called without its preconditions."""


class EnumerationCapError(HyperwalkError):
    """Exception raised when a nested-sum enumeration exceeds its budget."""

    def __init__(self, message: str, requested: int, cap: int) -> None:
        """Initialize cap error.

        Args:
            message: Error message
            requested: Requested size (sequence length or tuple count)
            cap: Configured cap that was exceeded
        """
        super().__init__(message)
        self.requested = requested
        self.cap = cap


class CrossCheckError(HyperwalkError):
    """Exception raised when two methods that must agree disagree."""

    def __init__(self, message: str, witness: Witness | None = None) -> None:
        """Initialize cross-check error.

        Args:
            message: Error message
            witness: Witness describing the disagreement, if any
        """
        super().__init__(message)
        self.witness = witness
