"""Graph validation, distances and edge-list I/O."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from pathlib import Path

import networkx as nx
import numpy as np

from .const import EDGE_LIST_COMMENT
from .exceptions import DisconnectedGraphError, GraphParseError, GraphValidationError
from .types import CheckResult, DistanceProfile, Graph, PointedGraph

_LOGGER = logging.getLogger(__name__)


def validate_graph(g: Graph) -> Graph:
    """Check that a graph is simple and connected.

    Simplicity is enforced when the Graph is built; this adds the
    connectivity check by BFS from vertex 0.

    Args:
        g: Graph to validate

    Returns:
        The same graph, for chaining

    Raises:
        GraphValidationError: If the graph has no vertices
        DisconnectedGraphError: If some vertex is unreachable from vertex 0
    """
    if g.vertex_count == 0:
        raise GraphValidationError("graph has no vertices")
    reached = nx.node_connected_component(g.to_networkx(), 0)
    if len(reached) != g.vertex_count:
        unreached = set(range(g.vertex_count)) - reached
        _LOGGER.debug("Graph is disconnected, %d vertices unreached", len(unreached))
        raise DisconnectedGraphError(unreached)
    return g


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Return the n x n BFS distance matrix of a connected graph."""
    n = g.vertex_count
    matrix = np.full((n, n), -1, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            matrix[source, target] = length
    if (matrix < 0).any():
        unreached = {int(v) for v in np.flatnonzero(matrix[0] < 0)}
        raise DisconnectedGraphError(unreached)
    return matrix


def compute_distance_profile(pg: PointedGraph) -> DistanceProfile:
    """Compute distances, spheres and sphere sizes around the base point.

    Args:
        pg: Pointed graph (must be connected)

    Returns:
        The distance profile with the all-pairs matrix filled in
    """
    g = validate_graph(pg.graph)
    matrix = all_pairs_distances(g)
    v0 = pg.base_point
    row = matrix[v0]
    eccentricity = int(row.max())
    spheres = tuple(
        tuple(int(v) for v in np.flatnonzero(row == k)) for k in range(eccentricity + 1)
    )
    profile = DistanceProfile(
        base_point=v0,
        distances_from_base=tuple(int(d) for d in row),
        spheres=spheres,
        sphere_sizes=tuple(len(s) for s in spheres),
        diameter=int(matrix.max()),
        all_pairs_distances=matrix,
    )
    _LOGGER.debug(
        "Distance profile for v0=%d: mu=%s, diam=%d",
        v0,
        profile.sphere_sizes,
        profile.diameter,
    )
    return profile


def eccentricities(profile: DistanceProfile) -> np.ndarray:
    """Return the eccentricity of every vertex."""
    return profile.all_pairs_distances.max(axis=1)


def check_self_centered(profile: DistanceProfile) -> CheckResult:
    """Check that every vertex has the same eccentricity.

    The witness pairs vertex 0 with the first vertex whose eccentricity
    differs, with both eccentricities as values.
    """
    ecc = eccentricities(profile)
    differing = np.flatnonzero(ecc != ecc[0])
    if differing.size == 0:
        return CheckResult.ok()
    w = int(differing[0])
    return CheckResult.fail("eccentricity", (0, w), (int(ecc[0]), int(ecc[w])))


def graph_is_self_centered(g: Graph) -> CheckResult:
    """Check self-centeredness of a bare graph."""
    return check_self_centered(compute_distance_profile(PointedGraph(g, 0)))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    The first meaningful line is "n m", followed by m lines "u v". Blank
    lines and lines starting with '#' are ignored.

    Raises:
        GraphParseError: If the document is malformed
        GraphValidationError: If the edges do not form a simple graph
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(EDGE_LIST_COMMENT):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", line_number)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError as err:
            raise GraphParseError(
                f"expected two integers, got {line!r}", line_number
            ) from err
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("counts must be non-negative", line_number)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise GraphParseError(
                f"edge ({a}, {b}) outside vertex range 0..{header[0] - 1}",
                line_number,
            )
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphParseError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def read_edge_list(path: str | Path) -> Graph:
    """Read a graph from an edge-list file."""
    path = Path(path)
    _LOGGER.debug("Reading edge list from %s", path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        raise GraphParseError(f"cannot read {path}: {err}") from err
    return parse_edge_list(text)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    """Render a graph in the edge-list format with canonical edge order."""
    lines = [f"{EDGE_LIST_COMMENT} {c}" for c in comments]
    edges = g.edges()
    lines.append(f"{g.vertex_count} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | Path, comments: Iterable[str] = ()) -> None:
    """Write a graph to an edge-list file."""
    Path(path).write_text(format_edge_list(g, comments), encoding="utf-8")
