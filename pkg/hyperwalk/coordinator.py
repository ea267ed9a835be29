"""Productivity decision pipeline for pointed graphs."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from functools import cached_property

from .exceptions import CrossCheckError, NotSelfCenteredError
from .graph import check_self_centered, compute_distance_profile
from .hypergroup import (
    build_structure_constants,
    check_associative,
    check_commutative,
    check_hypergroup_axioms,
    diam2_parameters,
    diam2_structure,
    multi_step_coefficients,
    shortcut_constants,
)
from .matrices import (
    build_adjacency_family,
    build_aggregation_map,
    build_transition_family,
    check_adjacency_commutation,
    check_daa_commutation,
    check_pd_equals_da,
)
from .symmetry import symmetry_report
from .types import (
    AdjacencyFamily,
    AggregationMap,
    CheckResult,
    Classification,
    Diam2Structure,
    DistanceProfile,
    EnumerationCaps,
    Graph,
    MethodResults,
    MultiStepResult,
    PointedGraph,
    StructureConstants,
    SymmetryReport,
    TransitionFamily,
    Verdict,
)

_LOGGER = logging.getLogger(__name__)


class ProductivityCoordinator:
    """Run and cross-check every productivity criterion for one pointed graph.

    Intermediate objects are built lazily and cached, so the CLI can ask for
    the matrices or the structure table without repeating the BFS work.
    """

    def __init__(
        self, pointed_graph: PointedGraph, caps: EnumerationCaps | None = None
    ) -> None:
        """Initialize the coordinator.

        Args:
            pointed_graph: Pointed graph to analyse
            caps: Enumeration caps for multi-step nested sums
        """
        self.pointed_graph = pointed_graph
        self.caps = caps or EnumerationCaps()
        self._decision_count = 0
        self._last_decision_duration: float | None = None
        self._verdict: Verdict | None = None

    @cached_property
    def profile(self) -> DistanceProfile:
        """Distance profile around the base point."""
        return compute_distance_profile(self.pointed_graph)

    @cached_property
    def self_centered(self) -> CheckResult:
        """Self-centeredness of the graph."""
        return check_self_centered(self.profile)

    @cached_property
    def symmetry(self) -> SymmetryReport:
        """(S1), (S2) and distance-regularity."""
        return symmetry_report(self.pointed_graph.graph, self.profile)

    @cached_property
    def structure_constants(self) -> StructureConstants:
        """Structure constants from the defining sum."""
        return build_structure_constants(self.profile)

    @cached_property
    def adjacency_family(self) -> AdjacencyFamily:
        """k-adjacency matrices."""
        return build_adjacency_family(self.profile)

    @cached_property
    def aggregation_map(self) -> AggregationMap:
        """Aggregation map D."""
        return build_aggregation_map(self.profile)

    @cached_property
    def transition_family(self) -> TransitionFamily:
        """k-transition matrices."""
        return build_transition_family(self.structure_constants)

    @property
    def s1s2(self) -> bool:
        """Whether both (S1) and (S2) hold."""
        return self.symmetry.s1.holds and self.symmetry.s2.holds

    @property
    def decision_count(self) -> int:
        """Get the number of completed decisions."""
        return self._decision_count

    @property
    def last_decision_duration(self) -> float | None:
        """Get the duration of the last decision in seconds."""
        return self._last_decision_duration

    def decide(self) -> Verdict:
        """Decide whether the pointed graph is hypergroup productive.

        Returns:
            The verdict, with every method's answer and the first failure

        Raises:
            NotSelfCenteredError: If the structure constants are undefined
            CrossCheckError: If two criteria that must agree disagree
        """
        if self._verdict is not None:
            return self._verdict
        start_time = time.perf_counter()
        v0 = self.pointed_graph.base_point
        _LOGGER.debug(
            "Deciding productivity for %d vertices at v0=%d",
            self.pointed_graph.graph.vertex_count,
            v0,
        )

        report = self.symmetry
        if report.s1 and not self.self_centered:
            raise CrossCheckError("(S1) holds on a graph that is not self-centered")
        if report.distance_regular and not self.s1s2:
            raise CrossCheckError("distance-regular graph fails (S1) or (S2)")

        sc = self.structure_constants
        axioms = check_hypergroup_axioms(sc)
        commutative = check_commutative(sc)
        associative = check_associative(sc)
        productive = axioms.holds and commutative.holds and associative.holds

        adjacency = check_adjacency_commutation(self.adjacency_family)
        daa: bool | None = None
        pd_da: bool | None = None
        if self.s1s2:
            daa, pd_da = self._cross_check(productive, commutative, adjacency)

        verdict = Verdict(
            base_point=v0,
            classification=self._classify(),
            productive=productive,
            method_results=MethodResults(
                brute_force=productive,
                daa_criterion=daa,
                adjacency_commutation=adjacency.holds,
                pd_equals_da=pd_da,
            ),
            sphere_sizes=self.profile.sphere_sizes,
            symmetry=report,
            structure_constants=sc,
            axioms=axioms,
            commutative=commutative,
            associative=associative,
            failure_witness=next(
                (r.witness for r in (axioms, commutative, associative) if not r),
                None,
            ),
        )

        self._decision_count += 1
        self._last_decision_duration = time.perf_counter() - start_time
        _LOGGER.debug(
            "Decision #%d for v0=%d: %s, productive=%s (%.3fs)",
            self._decision_count,
            v0,
            verdict.classification,
            productive,
            self._last_decision_duration,
        )
        self._verdict = verdict
        return verdict

    def _cross_check(
        self, productive: bool, commutative: CheckResult, adjacency: CheckResult
    ) -> tuple[bool, bool]:
        """Run the matrix criteria that hold under (S1) and (S2)."""
        sc = self.structure_constants
        if shortcut_constants(self.profile, self.symmetry) != sc:
            raise CrossCheckError("closed-form constants differ from the defining sum")

        pd_da = check_pd_equals_da(
            self.adjacency_family, self.transition_family, self.aggregation_map
        )
        if pd_da.holds != commutative.holds:
            raise CrossCheckError(
                f"commutativity is {commutative.holds} but P_h D = D A_h is "
                f"{pd_da.holds}",
                pd_da.witness or commutative.witness,
            )

        daa = check_daa_commutation(self.adjacency_family, self.aggregation_map)
        if daa.holds != productive:
            raise CrossCheckError(
                f"brute force says productive={productive} but the D A_k A_l "
                f"criterion says {daa.holds}",
                daa.witness,
            )
        if adjacency.holds and not productive:
            raise CrossCheckError(
                "k-adjacency matrices commute but the graph is not productive"
            )
        return daa.holds, pd_da.holds

    def _classify(self) -> Classification:
        if not self.self_centered:
            return Classification.NOT_SELF_CENTERED
        if self.symmetry.distance_regular:
            return Classification.DISTANCE_REGULAR
        if self.s1s2:
            return Classification.S1S2
        return Classification.SELF_CENTERED_ONLY

    def multi_step(
        self, sequence: Sequence[int], *, override: bool = False
    ) -> MultiStepResult:
        """Compute multi-step coefficients by every applicable method.

        The nested sum is evaluated whenever the caps allow it; the matrix
        product must match the convolution on productive graphs with (S1)
        and (S2).
        """
        result = multi_step_coefficients(
            self.structure_constants,
            sequence,
            self.profile,
            transitions=self.transition_family,
            report=self.symmetry,
            caps=self.caps,
            override=override,
        )
        if (
            self.s1s2
            and self.decide().productive
            and result.matrix_product != result.convolution
        ):
            raise CrossCheckError(
                f"matrix product {result.matrix_product} differs from convolution "
                f"{result.convolution} for sequence {result.sequence}"
            )
        return result

    def diam2(self) -> Diam2Structure | None:
        """Return the diameter-2 closed form when it applies.

        Raises:
            CrossCheckError: If the closed form disagrees with the table
        """
        if self.profile.index_set_size != 3 or not self.s1s2:
            return None
        structure = diam2_structure(*diam2_parameters(self.profile, self.symmetry))
        if structure.constants != self.structure_constants:
            raise CrossCheckError(
                f"diameter-2 closed form for (mu1, mu2, m) = "
                f"({structure.mu1}, {structure.mu2}, {structure.m}) differs from "
                "the defining sum"
            )
        return structure


def decide_productive(pg: PointedGraph, caps: EnumerationCaps | None = None) -> Verdict:
    """Decide productivity of a pointed graph."""
    return ProductivityCoordinator(pg, caps).decide()


def decide_graph_productive(g: Graph) -> dict[int, Verdict]:
    """Decide productivity at every base point of a graph.

    Raises:
        NotSelfCenteredError: If the graph is not self-centered
    """
    first = ProductivityCoordinator(PointedGraph(g, 0))
    result = first.self_centered
    if not result and result.witness is not None:
        u, w = result.witness.indices
        ecc_u, ecc_w = (int(e) for e in result.witness.values)
        raise NotSelfCenteredError(
            f"graph is not self-centered: vertex {u} has eccentricity {ecc_u}, "
            f"vertex {w} has {ecc_w}"
        )
    verdicts = {0: first.decide()}
    for v in range(1, g.vertex_count):
        verdicts[v] = ProductivityCoordinator(PointedGraph(g, v)).decide()
    productive = sum(v.productive for v in verdicts.values())
    _LOGGER.debug("%d of %d base points are productive", productive, len(verdicts))
    return verdicts
