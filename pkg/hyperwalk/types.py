"""Type definitions for the hyperwalk toolkit."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any, TypedDict

import networkx as nx
import numpy as np

from .const import (
    DEFAULT_MAX_SEQUENCE_LENGTH,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TUPLE_BUDGET,
    DEFAULT_WORKERS,
    OUTPUT_HUMAN,
    SCHEMA_VERSION,
)
from .exceptions import GraphValidationError, HyperwalkInputError


def format_fraction(value: Fraction | int) -> str:
    """Render an exact rational as a "num/den" string."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse a "num/den" string (or a bare integer) into a Fraction.

    Raises:
        HyperwalkInputError: If the text is not an exact rational
    """
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise HyperwalkInputError(f"not an exact rational: {text!r}") from err


def fraction_array(shape: tuple[int, ...]) -> np.ndarray:
    """Return an object array of the given shape filled with Fraction(0)."""
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


def fraction_matrix_payload(matrix: np.ndarray) -> list[Any]:
    """Serialize an exact matrix (any rank) into nested lists of "num/den"."""
    if matrix.ndim == 1:
        return [format_fraction(value) for value in matrix]
    return [fraction_matrix_payload(row) for row in matrix]


def fraction_array_from_payload(payload: Sequence[Any]) -> np.ndarray:
    """Rebuild an exact object array from nested lists of "num/den"."""
    return np.array(_parse_nested(payload), dtype=object)


def _parse_nested(payload: Any) -> Any:
    if isinstance(payload, str):
        return parse_fraction(payload)
    return [_parse_nested(item) for item in payload]


class Classification(StrEnum):
    """Strongest symmetry class attained by a pointed graph."""

    NOT_SELF_CENTERED = "not-self-centered"
    SELF_CENTERED_ONLY = "self-centered-only"
    S1S2 = "s1s2"
    DISTANCE_REGULAR = "distance-regular"


class WitnessPayload(TypedDict):
    """TypedDict for a serialized witness."""

    kind: str
    indices: list[int]
    values: list[str]


@dataclass(frozen=True)
class Witness:
    """A concrete counterexample reported by a checker.

    `indices` holds the offending index/vertex tuple in scan order and `values`
    the exact quantities that disagree (e.g. both sides of an identity).
    """

    kind: str
    indices: tuple[int, ...]
    values: tuple[Fraction, ...] = ()

    def to_payload(self) -> WitnessPayload:
        """Serialize the witness."""
        return {
            "kind": self.kind,
            "indices": list(self.indices),
            "values": [format_fraction(v) for v in self.values],
        }

    @classmethod
    def from_payload(cls, data: WitnessPayload) -> Witness:
        """Rebuild a witness from its payload."""
        return cls(
            kind=data["kind"],
            indices=tuple(int(i) for i in data["indices"]),
            values=tuple(parse_fraction(v) for v in data["values"]),
        )


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a property check with the first violation, if any."""

    holds: bool
    witness: Witness | None = None
    per_index: tuple[bool, ...] = ()

    def __bool__(self) -> bool:
        """Return whether the property holds."""
        return self.holds

    @classmethod
    def ok(cls, per_index: Iterable[bool] = ()) -> CheckResult:
        """Return a passing result."""
        return cls(True, None, tuple(per_index))

    @classmethod
    def fail(
        cls,
        kind: str,
        indices: Iterable[int],
        values: Iterable[Fraction | int] = (),
        per_index: Iterable[bool] = (),
    ) -> CheckResult:
        """Return a failing result carrying a witness."""
        witness = Witness(
            kind, tuple(int(i) for i in indices), tuple(Fraction(v) for v in values)
        )
        return cls(False, witness, tuple(per_index))

    def to_payload(self) -> dict[str, Any]:
        """Serialize the result."""
        payload: dict[str, Any] = {
            "holds": self.holds,
            "witness": self.witness.to_payload() if self.witness else None,
        }
        if self.per_index:
            payload["per_index"] = list(self.per_index)
        return payload

    @classmethod
    def from_payload(cls, data: dict[str, Any]) -> CheckResult:
        """Rebuild a result from its payload."""
        witness = data.get("witness")
        return cls(
            holds=bool(data["holds"]),
            witness=Witness.from_payload(witness) if witness else None,
            per_index=tuple(bool(b) for b in data.get("per_index", ())),
        )


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    The constructor enforces simplicity: no self-loops, no duplicate
    neighbors and symmetric adjacency. Connectivity is checked separately by
    `validate_graph`.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Normalize adjacency and enforce simplicity."""
        if self.vertex_count < 0:
            raise GraphValidationError("vertex count must be non-negative")
        if len(self.adjacency) != self.vertex_count:
            raise GraphValidationError(
                f"adjacency has {len(self.adjacency)} rows for "
                f"{self.vertex_count} vertices"
            )
        rows = tuple(tuple(sorted(row)) for row in self.adjacency)
        for v, row in enumerate(rows):
            if len(set(row)) != len(row):
                raise GraphValidationError(f"duplicate neighbor in row of vertex {v}")
            for u in row:
                if not 0 <= u < self.vertex_count:
                    raise GraphValidationError(
                        f"neighbor {u} of vertex {v} is out of range"
                    )
                if u == v:
                    raise GraphValidationError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in row:
                if v not in rows[u]:
                    raise GraphValidationError(
                        f"asymmetric adjacency: {u} in N({v}) but {v} not in N({u})"
                    )
        object.__setattr__(self, "adjacency", rows)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an undirected edge list."""
        rows: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphValidationError(f"edge ({u}, {v}) is out of range")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if v in rows[u]:
                raise GraphValidationError(f"duplicate edge ({u}, {v})")
            rows[u].append(v)
            rows[v].append(u)
        return cls(vertex_count, tuple(tuple(row) for row in rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Build a graph from a networkx graph, relabelling nodes in sorted order."""
        if graph.is_directed() or graph.is_multigraph():
            raise GraphValidationError("only simple undirected graphs are supported")
        relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        return cls.from_edges(relabelled.number_of_nodes(), relabelled.edges())

    def to_networkx(self) -> nx.Graph:
        """Return an equivalent networkx graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    def edges(self) -> list[tuple[int, int]]:
        """Return the edges as (u, v) pairs with u < v in canonical order."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    def degree(self, vertex: int) -> int:
        """Return the degree of a vertex."""
        return len(self.adjacency[vertex])

    @property
    def edge_count(self) -> int:
        """Return the number of edges."""
        return sum(len(row) for row in self.adjacency) // 2


@dataclass(frozen=True)
class PointedGraph:
    """A graph together with its base point v0."""

    graph: Graph
    base_point: int = 0

    def __post_init__(self) -> None:
        """Validate the base point."""
        if self.graph.vertex_count == 0:
            raise GraphValidationError("the empty graph has no base point")
        if not 0 <= self.base_point < self.graph.vertex_count:
            raise GraphValidationError(
                f"base point {self.base_point} is not a vertex of a graph with "
                f"{self.graph.vertex_count} vertices"
            )


@dataclass(frozen=True, eq=False)
class DistanceProfile:
    """BFS distance data for a pointed graph.

    `spheres[k]` is S_k(v0) as a sorted tuple for k = 0..ecc(v0); the index set
    I(Γ, v0) is range(index_set_size). `diameter` is diam(Γ), which equals
    ecc(v0) on self-centered graphs.
    """

    base_point: int
    distances_from_base: tuple[int, ...]
    spheres: tuple[tuple[int, ...], ...]
    sphere_sizes: tuple[int, ...]
    diameter: int
    all_pairs_distances: np.ndarray

    @property
    def vertex_count(self) -> int:
        """Return the number of vertices."""
        return len(self.distances_from_base)

    @property
    def index_set_size(self) -> int:
        """Return |I(Γ, v0)|."""
        return len(self.spheres)

    @property
    def index_set(self) -> range:
        """Return I(Γ, v0) as a range."""
        return range(self.index_set_size)

    def sphere(self, vertex: int, radius: int) -> np.ndarray:
        """Return S_radius(vertex) as a sorted integer array."""
        return np.flatnonzero(self.all_pairs_distances[vertex] == radius)

    @property
    def sphere_size_table(self) -> np.ndarray:
        """Return the n x (diam+1) table of |S_k(v)|."""
        width = self.diameter + 1
        return np.stack(
            [np.bincount(row, minlength=width) for row in self.all_pairs_distances]
        )


@dataclass(frozen=True)
class CayleySpec:
    """Cayley graph specification over Z/nZ or an explicit multiplication table.

    Exactly one of `group_order` and `table` is given. Table entries are
    `table[g][h] = g*h` with element 0 the identity.
    """

    generating_set: tuple[int, ...]
    group_order: int | None = None
    table: tuple[tuple[int, ...], ...] | None = None

    @property
    def order(self) -> int:
        """Return the number of group elements."""
        if self.table is not None:
            return len(self.table)
        return self.group_order or 0


@dataclass(frozen=True, eq=False)
class AdjacencyFamily:
    """The k-adjacency matrices A^(k) and their normalizations A_k.

    `matrices[k]` is the integer 0/1 matrix A^(k); `normalized[k]` is the exact
    object matrix A^(k)/μ_k with μ_k = |S_k(v0)|. `base_point_relative` is true
    when (S1) fails, so μ_k is only meaningful at v0.
    """

    matrices: tuple[np.ndarray, ...]
    normalized: tuple[np.ndarray, ...]
    sphere_sizes: tuple[int, ...]
    base_point_relative: bool = False

    @property
    def size(self) -> int:
        """Return the number of matrices."""
        return len(self.matrices)


@dataclass(frozen=True, eq=False)
class AggregationMap:
    """The (diam+1) x n zero-one matrix D summing coordinates over spheres."""

    d_matrix: np.ndarray

    def section(self) -> np.ndarray:
        """Return an n x (diam+1) right inverse of D.

        Column i is the indicator of the smallest vertex of S_i(v0), so
        D @ section() is the identity.
        """
        rows, cols = self.d_matrix.shape
        right = np.zeros((cols, rows), dtype=np.int64)
        for i in range(rows):
            right[int(np.flatnonzero(self.d_matrix[i])[0]), i] = 1
        return right


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Exact table q[i][j][k] with x_i ∘ x_j = Σ_k q[i][j][k] x_k."""

    table: np.ndarray

    @property
    def size(self) -> int:
        """Return |I|."""
        return int(self.table.shape[0])

    def product(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Return the coefficient vector of x_i ∘ x_j."""
        return tuple(self.table[i, j])

    def __eq__(self, other: object) -> bool:
        """Compare tables entrywise and exactly."""
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.table.shape == other.table.shape and bool(
            np.all(self.table == other.table)
        )

    __hash__ = None  # type: ignore[assignment]

    def to_payload(self) -> list[Any]:
        """Serialize as nested arrays of "num/den" strings."""
        return fraction_matrix_payload(self.table)

    @classmethod
    def from_payload(cls, payload: Sequence[Any]) -> StructureConstants:
        """Rebuild from nested arrays of "num/den" strings."""
        return cls(fraction_array_from_payload(payload))

    @classmethod
    def from_rows(cls, rows: dict[tuple[int, int], Sequence[Fraction | int]]) -> StructureConstants:
        """Build a commutative table from the products x_i ∘ x_j with i <= j.

        Products with x_0 are filled in as the unit laws.
        """
        size = len(next(iter(rows.values())))
        table = fraction_array((size, size, size))
        for i in range(size):
            table[0, i, i] = Fraction(1)
            table[i, 0, i] = Fraction(1)
        for (i, j), coefficients in rows.items():
            values = [Fraction(c) for c in coefficients]
            table[i, j, :] = values
            table[j, i, :] = values
        return cls(table)


@dataclass(frozen=True, eq=False)
class TransitionFamily:
    """The k-transition matrices with P_k[i][j] = p_{k,i}^j."""

    matrices: tuple[np.ndarray, ...]

    @property
    def size(self) -> int:
        """Return |I|."""
        return len(self.matrices)

    def operator(self, h: int) -> np.ndarray:
        """Return the matrix of P_h acting on column vectors, i.e. its transpose."""
        return self.matrices[h].T


@dataclass(frozen=True, eq=False)
class SymmetryReport:
    """Results of the (S1), (S2) and distance-regularity checks.

    `intersection_tables[k][i][j]` is |S_i(z_k) ∩ S_j(v0)| for the smallest
    vertex z_k of S_k(v0), present only when (S2) holds.
    """

    s1: CheckResult
    s2: CheckResult
    distance_regular: CheckResult
    intersection_tables: np.ndarray | None = None
    intersection_array: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def to_payload(self) -> dict[str, Any]:
        """Serialize the report."""
        return {
            "s1": self.s1.to_payload(),
            "s2": self.s2.to_payload(),
            "distance_regular": self.distance_regular.to_payload(),
            "intersection_tables": (
                self.intersection_tables.tolist()
                if self.intersection_tables is not None
                else None
            ),
            "intersection_array": (
                [list(self.intersection_array[0]), list(self.intersection_array[1])]
                if self.intersection_array is not None
                else None
            ),
        }

    @classmethod
    def from_payload(cls, data: dict[str, Any]) -> SymmetryReport:
        """Rebuild a report from its payload."""
        tables = data.get("intersection_tables")
        array = data.get("intersection_array")
        return cls(
            s1=CheckResult.from_payload(data["s1"]),
            s2=CheckResult.from_payload(data["s2"]),
            distance_regular=CheckResult.from_payload(data["distance_regular"]),
            intersection_tables=(
                np.array(tables, dtype=np.int64) if tables is not None else None
            ),
            intersection_array=(
                (tuple(array[0]), tuple(array[1])) if array is not None else None
            ),
        )


@dataclass(frozen=True)
class MethodResults:
    """Per-method productivity answers; None means not applicable."""

    brute_force: bool
    daa_criterion: bool | None
    adjacency_commutation: bool
    pd_equals_da: bool | None = None


@dataclass(frozen=True, eq=False)
class Verdict:
    """Productivity decision for a pointed graph."""

    base_point: int
    classification: Classification
    productive: bool
    method_results: MethodResults
    sphere_sizes: tuple[int, ...]
    symmetry: SymmetryReport
    structure_constants: StructureConstants
    axioms: CheckResult
    commutative: CheckResult
    associative: CheckResult
    failure_witness: Witness | None = None

    def to_payload(self) -> dict[str, Any]:
        """Serialize the verdict as a versioned JSON-ready document."""
        return {
            "schema": SCHEMA_VERSION,
            "base_point": self.base_point,
            "classification": str(self.classification),
            "productive": self.productive,
            "method_results": {
                "brute_force": self.method_results.brute_force,
                "daa_criterion": self.method_results.daa_criterion,
                "adjacency_commutation": self.method_results.adjacency_commutation,
                "pd_equals_da": self.method_results.pd_equals_da,
            },
            "sphere_sizes": list(self.sphere_sizes),
            "symmetry": self.symmetry.to_payload(),
            "structure_constants": self.structure_constants.to_payload(),
            "axioms": self.axioms.to_payload(),
            "commutative": self.commutative.to_payload(),
            "associative": self.associative.to_payload(),
            "failure_witness": (
                self.failure_witness.to_payload() if self.failure_witness else None
            ),
        }

    @classmethod
    def from_payload(cls, data: dict[str, Any]) -> Verdict:
        """Rebuild a verdict from its payload.

        Raises:
            HyperwalkInputError: If the schema version is not supported
        """
        if data.get("schema") != SCHEMA_VERSION:
            raise HyperwalkInputError(f"unsupported schema {data.get('schema')!r}")
        methods = data["method_results"]
        witness = data.get("failure_witness")
        return cls(
            base_point=int(data["base_point"]),
            classification=Classification(data["classification"]),
            productive=bool(data["productive"]),
            method_results=MethodResults(
                brute_force=methods["brute_force"],
                daa_criterion=methods["daa_criterion"],
                adjacency_commutation=methods["adjacency_commutation"],
                pd_equals_da=methods.get("pd_equals_da"),
            ),
            sphere_sizes=tuple(data["sphere_sizes"]),
            symmetry=SymmetryReport.from_payload(data["symmetry"]),
            structure_constants=StructureConstants.from_payload(
                data["structure_constants"]
            ),
            axioms=CheckResult.from_payload(data["axioms"]),
            commutative=CheckResult.from_payload(data["commutative"]),
            associative=CheckResult.from_payload(data["associative"]),
            failure_witness=Witness.from_payload(witness) if witness else None,
        )

    def __eq__(self, other: object) -> bool:
        """Compare two verdicts through their serialized form."""
        if not isinstance(other, Verdict):
            return NotImplemented
        return self.to_payload() == other.to_payload()

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class Diam2Structure:
    """Closed-form structure of a diameter-2 pointed graph with (S1) and (S2)."""

    mu1: int
    mu2: int
    m: int
    constants: StructureConstants

    def row(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Return the coefficients of x_i ∘ x_j."""
        return self.constants.product(i, j)


@dataclass(frozen=True)
class WildbergerParams:
    """Parameters of a commutative order-3 structure.

    c1∘c1 = (1/ω1)c0 + α1 c1 + β1 c2, c2∘c2 = (1/ω2)c0 + β2 c1 + α2 c2 and
    c1∘c2 = γ1 c1 + γ2 c2.
    """

    omega1: Fraction
    omega2: Fraction
    alpha1: Fraction
    alpha2: Fraction
    beta1: Fraction
    beta2: Fraction
    gamma1: Fraction
    gamma2: Fraction


@dataclass(frozen=True)
class MultiStepResult:
    """Coefficients of a multi-step walk computed by independent methods."""

    sequence: tuple[int, ...]
    convolution: tuple[Fraction, ...]
    enumeration: tuple[Fraction, ...] | None = None
    matrix_product: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class WalkSpec:
    """Monte Carlo walk specification; the walk starts at the base point."""

    pointed_graph: PointedGraph
    sequence: tuple[int, ...]
    sample_count: int
    seed: int
    workers: int = 1


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Tallied endpoint spheres of a simulated walk."""

    counts: tuple[int, ...]
    sample_count: int
    reference: tuple[Fraction, ...]
    seed: int = 0
    workers: int = 1

    @property
    def probabilities(self) -> tuple[float, ...]:
        """Return the estimated probabilities."""
        return tuple(c / self.sample_count for c in self.counts)

    @property
    def standard_errors(self) -> tuple[float, ...]:
        """Return binomial standard errors under the exact reference."""
        return tuple(
            math.sqrt(float(p) * (1 - float(p)) / self.sample_count)
            for p in self.reference
        )


@dataclass(frozen=True)
class ComparisonReport:
    """Per-component z-scores of an empirical distribution."""

    z_scores: tuple[float, ...]
    suspicious: tuple[int, ...]
    gate: float
    passed: bool
    total_variation: float = 0.0


@dataclass(frozen=True)
class EnumerationCaps:
    """Limits on the nested-sum walk enumeration."""

    max_sequence_length: int = DEFAULT_MAX_SEQUENCE_LENGTH
    tuple_budget: int = DEFAULT_TUPLE_BUDGET


@dataclass(frozen=True)
class RunConfig:
    """A validated command-line run."""

    command: str
    graph: tuple[str, ...] = ()
    base_point: int | None = None
    output: str = OUTPUT_HUMAN
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    workers: int = DEFAULT_WORKERS
    sequence: tuple[int, ...] = ()
    caps: EnumerationCaps = field(default_factory=EnumerationCaps)
    dump_matrices: bool = False
    all_bases: bool = False
    out_path: str | None = None
