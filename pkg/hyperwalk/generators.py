"""Constructors for example graphs and standard graph families."""

from __future__ import annotations

import logging
import re
from collections.abc import Callable, Sequence
from typing import Final

import networkx as nx

from .const import (
    FAMILY_CAYLEY,
    FAMILY_COMPLETE,
    FAMILY_CYCLE,
    FAMILY_FIG2,
    FAMILY_HYPERCUBE,
    FAMILY_PATH,
    FAMILY_PETERSEN,
    FAMILY_PLATONIC,
    FAMILY_PRISM,
    PLATONIC_SOLIDS,
)
from .exceptions import (
    InvalidCayleySpecError,
    InvalidParametersError,
    UnknownGraphFamilyError,
)
from .types import CayleySpec, Graph, PointedGraph

_LOGGER = logging.getLogger(__name__)

_PLATONIC_BUILDERS: Final[dict[str, Callable[[], nx.Graph]]] = {
    "tetrahedron": nx.tetrahedral_graph,
    "cube": nx.cubical_graph,
    "octahedron": nx.octahedral_graph,
    "dodecahedron": nx.dodecahedral_graph,
    "icosahedron": nx.icosahedral_graph,
}

# Vertex 0 is the top apex, 1..6 the upper hexagon in cyclic order,
# 7..12 the lower hexagon in the same order, 13 the bottom apex.
_FIGURE2_EDGES: Final[tuple[tuple[int, int], ...]] = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6),
    (1, 7), (1, 8), (1, 12),
    (2, 7), (2, 8), (2, 9),
    (3, 8), (3, 9), (3, 10),
    (4, 9), (4, 10), (4, 11),
    (5, 10), (5, 11), (5, 12),
    (6, 7), (6, 11), (6, 12),
    (7, 8), (8, 9), (9, 10), (10, 11), (11, 12), (7, 12),
    (7, 13), (8, 13), (9, 13), (10, 13), (11, 13), (12, 13),
)  # fmt: skip


def cycle(n: int) -> Graph:
    """Return the n-cycle with edges i ~ i+1 mod n."""
    if n < 3:
        raise InvalidParametersError(f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def complete(n: int) -> Graph:
    """Return the complete graph K_n."""
    if n < 1:
        raise InvalidParametersError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def path(n: int) -> Graph:
    """Return the path graph P_n on n vertices."""
    if n < 1:
        raise InvalidParametersError(f"path needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def petersen() -> Graph:
    """Return the Petersen graph."""
    return Graph.from_networkx(nx.petersen_graph())


def hypercube(d: int) -> Graph:
    """Return the d-dimensional hypercube Q_d.

    Vertices are the bit strings of length d in lexicographic order.
    """
    if d < 1:
        raise InvalidParametersError(f"hypercube needs d >= 1, got {d}")
    return Graph.from_networkx(nx.hypercube_graph(d))


def platonic(name: str) -> Graph:
    """Return the 1-skeleton of a platonic solid."""
    try:
        builder = _PLATONIC_BUILDERS[name.lower()]
    except KeyError as err:
        raise UnknownGraphFamilyError(
            f"unknown platonic solid {name!r}; expected one of {', '.join(PLATONIC_SOLIDS)}"
        ) from err
    return Graph.from_networkx(builder())


def figure2_graph() -> PointedGraph:
    """Return the 14-vertex 6-regular graph with sphere sizes (1, 6, 6, 1) at its apex.

    Each upper hexagon vertex is joined to the lower vertex below it and to
    the lower vertices below its two hexagon neighbours.
    """
    return PointedGraph(Graph.from_edges(14, _FIGURE2_EDGES), base_point=0)


def cyclic_group_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Return the multiplication table of Z/nZ."""
    if n < 1:
        raise InvalidCayleySpecError(f"group order must be positive, got {n}")
    return tuple(tuple((g + h) % n for h in range(n)) for g in range(n))


def _validate_table(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    if n == 0:
        raise InvalidCayleySpecError("multiplication table is empty")
    for g, row in enumerate(table):
        if len(row) != n:
            raise InvalidCayleySpecError(f"row {g} of the table has {len(row)} entries")
        if sorted(row) != list(range(n)):
            raise InvalidCayleySpecError(f"row {g} of the table is not a permutation")
        if table[0][g] != g or row[0] != g:
            raise InvalidCayleySpecError("element 0 must be the identity")


def cayley(spec: CayleySpec) -> Graph:
    """Build the Cayley graph with edges {g, g*s} for each generator s.

    Args:
        spec: Group and generating set

    Returns:
        The Cayley graph, vertices indexed by group element

    Raises:
        InvalidCayleySpecError: If the generating set contains the identity,
            is not closed under inverses, or does not generate the group
    """
    if (spec.table is None) == (spec.group_order is None):
        raise InvalidCayleySpecError("give exactly one of group_order and table")
    table = spec.table if spec.table is not None else cyclic_group_table(spec.order)
    _validate_table(table)
    n = len(table)
    generators = sorted(set(spec.generating_set))
    if len(generators) != len(spec.generating_set):
        raise InvalidCayleySpecError("generating set has repeated elements")
    for s in generators:
        if not 0 <= s < n:
            raise InvalidCayleySpecError(f"generator {s} is not a group element")
        if s == 0:
            raise InvalidCayleySpecError("generating set contains the identity")
        inverse = table[s].index(0)
        if inverse not in generators:
            raise InvalidCayleySpecError(
                f"generating set is not closed under inverses: {s}^-1 = {inverse} missing"
            )
    rows = tuple(tuple(table[g][s] for s in generators) for g in range(n))
    graph = Graph(n, rows)
    if n > 1 and not nx.is_connected(graph.to_networkx()):
        raise InvalidCayleySpecError(
            f"generators {generators} do not generate the group of order {n}"
        )
    _LOGGER.debug("Built Cayley graph of order %d on generators %s", n, generators)
    return graph


def prism_cayley() -> PointedGraph:
    """Return the triangular prism as the Cayley graph of Z/6Z on {2, 3, 4}.

    Sphere sizes are constant but intersection counts with the spheres of
    vertex 0 are not.
    """
    return PointedGraph(cayley(CayleySpec((2, 3, 4), group_order=6)), base_point=0)


def corpus() -> list[tuple[str, PointedGraph]]:
    """Return the named corpus of pointed graphs satisfying (S1) and (S2)."""
    members: list[tuple[str, PointedGraph]] = []
    members.extend((f"cycle{n}", PointedGraph(cycle(n))) for n in range(3, 13))
    members.extend((f"complete{n}", PointedGraph(complete(n))) for n in range(2, 9))
    members.append((FAMILY_PETERSEN, PointedGraph(petersen())))
    members.extend((f"hypercube{d}", PointedGraph(hypercube(d))) for d in range(2, 5))
    members.extend((name, PointedGraph(platonic(name))) for name in PLATONIC_SOLIDS)
    members.append((FAMILY_FIG2, figure2_graph()))
    return members


_NUMBERED: Final = re.compile(
    rf"^({FAMILY_PATH}|{FAMILY_CYCLE}|{FAMILY_COMPLETE}|{FAMILY_HYPERCUBE})\s*(\d+)$"
)
_PLATONIC: Final = re.compile(rf"^{FAMILY_PLATONIC}\s+([a-z]+)$")
_CAYLEY: Final = re.compile(rf"^{FAMILY_CAYLEY}\s+z(\d+)\s+(\d+(?:\s*,\s*\d+)*)$")
_PARAMETRIZED_FAMILIES: Final = frozenset(
    {
        FAMILY_PATH,
        FAMILY_CYCLE,
        FAMILY_COMPLETE,
        FAMILY_HYPERCUBE,
        FAMILY_PLATONIC,
        FAMILY_CAYLEY,
    }
)

_NUMBERED_BUILDERS: Final[dict[str, Callable[[int], Graph]]] = {
    FAMILY_PATH: path,
    FAMILY_CYCLE: cycle,
    FAMILY_COMPLETE: complete,
    FAMILY_HYPERCUBE: hypercube,
}


def resolve_builtin(tokens: Sequence[str]) -> PointedGraph | None:
    """Resolve a builtin graph name such as "cycle 4" or "cayley z4 1,3".

    Returns:
        The pointed graph (base point 0), or None when the tokens do not
        name a builtin family and should be treated as a file path

    Raises:
        UnknownGraphFamilyError: If the family is known but its parameters
            do not parse
    """
    text = " ".join(tokens).strip().lower()
    if text == FAMILY_PETERSEN:
        return PointedGraph(petersen())
    if text == FAMILY_FIG2:
        return figure2_graph()
    if text == FAMILY_PRISM:
        return prism_cayley()
    if match := _NUMBERED.match(text):
        return PointedGraph(_NUMBERED_BUILDERS[match.group(1)](int(match.group(2))))
    if match := _PLATONIC.match(text):
        return PointedGraph(platonic(match.group(1)))
    if match := _CAYLEY.match(text):
        generators = tuple(int(s) for s in match.group(2).replace(" ", "").split(","))
        spec = CayleySpec(generators, group_order=int(match.group(1)))
        return PointedGraph(cayley(spec))
    if tokens and tokens[0].lower() in _PARAMETRIZED_FAMILIES:
        raise UnknownGraphFamilyError(f"cannot parse builtin graph {text!r}")
    return None
