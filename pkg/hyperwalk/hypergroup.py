"""Structure constants of the pre-hypergroup of a pointed graph and their axioms."""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from .exceptions import (
    CrossCheckError,
    EnumerationCapError,
    InvalidParametersError,
    PreconditionError,
    SphereEmptyError,
)
from .matrices import extract_from_base, first_mismatch
from .types import (
    CheckResult,
    Diam2Structure,
    DistanceProfile,
    EnumerationCaps,
    MultiStepResult,
    StructureConstants,
    SymmetryReport,
    TransitionFamily,
    WildbergerParams,
    fraction_array,
)

_LOGGER = logging.getLogger(__name__)


def build_structure_constants(profile: DistanceProfile) -> StructureConstants:
    """Compute p_{i,j}^k from its defining sum.

    p_{i,j}^k = (1/μ_i) Σ_{v ∈ S_i(v0)} |S_j(v) ∩ S_k(v0)| / |S_j(v)|

    Args:
        profile: Distance profile of the pointed graph

    Returns:
        The exact table, indexed by I(Γ, v0)

    Raises:
        SphereEmptyError: If some |S_j(v)| needed by the sum is zero
    """
    size = profile.index_set_size
    base_row = profile.all_pairs_distances[profile.base_point]
    table = fraction_array((size, size, size))
    for i, sphere in enumerate(profile.spheres):
        for v in sphere:
            for j in range(size):
                s_j = profile.sphere(v, j)
                if s_j.size == 0:
                    raise SphereEmptyError(v, j)
                landing = np.bincount(base_row[s_j], minlength=size)
                for k in range(size):
                    if landing[k]:
                        table[i, j, k] += Fraction(int(landing[k]), s_j.size)
        table[i] = table[i] * Fraction(1, len(sphere))
    return StructureConstants(table)


def shortcut_constants(
    profile: DistanceProfile, report: SymmetryReport
) -> StructureConstants:
    """Compute p_{i,j}^k = μ_k |S_j(z_k) ∩ S_i(v0)| / (μ_i μ_j).

    Raises:
        PreconditionError: If (S1) or (S2) fails
    """
    if not (report.s1 and report.s2) or report.intersection_tables is None:
        raise PreconditionError("closed-form constants need (S1) and (S2)")
    tables = report.intersection_tables
    mu = profile.sphere_sizes
    size = profile.index_set_size
    table = fraction_array((size, size, size))
    for i in range(size):
        for j in range(size):
            for k in range(size):
                table[i, j, k] = Fraction(
                    mu[k] * int(tables[k, j, i]), mu[i] * mu[j]
                )
    return StructureConstants(table)


def check_commutative(sc: StructureConstants) -> CheckResult:
    """Check q_{i,j}^k = q_{j,i}^k; witness (i, j, k) with i < j."""
    table = sc.table
    for i in range(sc.size):
        for j in range(i + 1, sc.size):
            for k in range(sc.size):
                if table[i, j, k] != table[j, i, k]:
                    return CheckResult.fail(
                        "commutativity", (i, j, k), (table[i, j, k], table[j, i, k])
                    )
    return CheckResult.ok()


def check_associative(sc: StructureConstants) -> CheckResult:
    """Check (x_i ∘ x_l) ∘ x_j = x_i ∘ (x_l ∘ x_j) for every triple.

    Both sides are expanded as coefficient vectors. The witness is
    (i, l, j, m) with the two coefficients of x_m.
    """
    table = sc.table
    # left[i, l, j, m] = Σ_h q_{i,l}^h q_{h,j}^m
    left = np.tensordot(table, table, axes=([2], [0]))
    # right[i, l, j, m] = Σ_h q_{l,j}^h q_{i,h}^m
    right = np.tensordot(table, table, axes=([1], [2])).transpose(0, 2, 3, 1)
    where = first_mismatch(left, right)
    if where is None:
        return CheckResult.ok()
    return CheckResult.fail("associativity", where, (left[where], right[where]))


def check_hypergroup_axioms(sc: StructureConstants) -> CheckResult:
    """Check the pre-hypergroup axioms with the identity involution.

    Checked in order: non-negativity, Σ_k q_{i,j}^k = 1, x_0 as a two-sided
    unit, and q_{i,j}^0 != 0 exactly when i = j.
    """
    table = sc.table
    size = sc.size
    for index in np.ndindex(table.shape):
        if table[index] < 0:
            return CheckResult.fail("negative", index, (table[index],))
    for i in range(size):
        for j in range(size):
            total = sum(table[i, j], Fraction(0))
            if total != 1:
                return CheckResult.fail("normalization", (i, j), (total,))
    for j in range(size):
        for k in range(size):
            expected = int(j == k)
            if table[0, j, k] != expected:
                return CheckResult.fail("unit", (0, j, k), (table[0, j, k],))
            if table[j, 0, k] != expected:
                return CheckResult.fail("unit", (j, 0, k), (table[j, 0, k],))
    for i in range(size):
        for j in range(size):
            if (table[i, j, 0] != 0) != (i == j):
                return CheckResult.fail("involution", (i, j), (table[i, j, 0],))
    return CheckResult.ok()


def check_hermitian(sc: StructureConstants) -> CheckResult:
    """Check that the table defines a hermitian hypergroup."""
    for check in (check_hypergroup_axioms, check_commutative, check_associative):
        result = check(sc)
        if not result:
            return result
    return CheckResult.ok()


def convolve(
    sc: StructureConstants, a: Sequence[Fraction | int], b: Sequence[Fraction | int]
) -> tuple[Fraction, ...]:
    """Return the coefficients of (Σ a_i x_i) ∘ (Σ b_j x_j)."""
    outer = np.outer(np.array(a, dtype=object), np.array(b, dtype=object))
    product = np.tensordot(outer, sc.table, axes=([0, 1], [0, 1]))
    return tuple(Fraction(c) for c in product)


def _basis(size: int, index: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(k == index)) for k in range(size))


def left_nested_convolution(
    sc: StructureConstants, sequence: Sequence[int]
) -> tuple[Fraction, ...]:
    """Return ((x_{i_1} ∘ x_{i_2}) ∘ ⋯) ∘ x_{i_m}."""
    if not sequence:
        raise InvalidParametersError("jump sequence is empty")
    _check_indices(sc.size, sequence)
    result = _basis(sc.size, sequence[0])
    for i in sequence[1:]:
        result = convolve(sc, result, _basis(sc.size, i))
    return result


def _check_indices(size: int, sequence: Sequence[int]) -> None:
    for i in sequence:
        if not 0 <= i < size:
            raise InvalidParametersError(
                f"jump index {i} is outside the index set 0..{size - 1}"
            )


def enumeration_bound(profile: DistanceProfile, sequence: Sequence[int]) -> int:
    """Return an upper bound on the vertex tuples a nested sum visits."""
    table = profile.sphere_size_table
    first = profile.sphere_sizes[sequence[0]]
    return first * math.prod(int(table[:, i].max()) for i in sequence[1:])


def walk_coefficients(
    profile: DistanceProfile,
    sequence: Sequence[int],
    caps: EnumerationCaps | None = None,
    *,
    override: bool = False,
) -> tuple[Fraction, ...]:
    """Evaluate the nested sum over walks v0 -> v_1 -> ⋯ -> v_m.

    Each v_j is drawn uniformly from S_{i_j}(v_{j-1}); the result is the exact
    distribution of d(v0, v_m). The sum is carried as an exact law over
    vertices, pushed through one sphere per jump. The caps still bound the
    number of vertex tuples the sum ranges over.

    Raises:
        EnumerationCapError: If the sequence or tuple count exceeds the caps
            and override is not set
        SphereEmptyError: If the walk reaches a vertex with an empty sphere
    """
    caps = caps or EnumerationCaps()
    if not sequence:
        raise InvalidParametersError("jump sequence is empty")
    _check_indices(profile.index_set_size, sequence)
    if not override:
        if len(sequence) > caps.max_sequence_length:
            raise EnumerationCapError(
                f"sequence of length {len(sequence)} exceeds the enumeration cap",
                len(sequence),
                caps.max_sequence_length,
            )
        bound = enumeration_bound(profile, sequence)
        if bound > caps.tuple_budget:
            raise EnumerationCapError(
                f"nested sum may visit {bound} tuples", bound, caps.tuple_budget
            )
    size = profile.index_set_size
    base_row = profile.all_pairs_distances[profile.base_point]
    sphere_lists: dict[int, list[list[int]]] = {}
    law: dict[int, Fraction] = {profile.base_point: Fraction(1)}
    for radius in sequence:
        if radius not in sphere_lists:
            sphere_lists[radius] = [
                profile.sphere(v, radius).tolist() for v in range(profile.vertex_count)
            ]
        step: defaultdict[int, Fraction] = defaultdict(Fraction)
        for vertex in sorted(law):
            sphere = sphere_lists[radius][vertex]
            if not sphere:
                raise SphereEmptyError(vertex, radius)
            share = law[vertex] / len(sphere)
            for nxt in sphere:
                step[nxt] += share
        law = step

    totals = [Fraction(0)] * size
    for vertex, weight in law.items():
        totals[int(base_row[vertex])] += weight
    return tuple(totals)


def multi_step_coefficients(
    sc: StructureConstants,
    sequence: Sequence[int],
    profile: DistanceProfile | None = None,
    *,
    transitions: TransitionFamily | None = None,
    report: SymmetryReport | None = None,
    caps: EnumerationCaps | None = None,
    override: bool = False,
) -> MultiStepResult:
    """Compute multi-step coefficients by up to three independent methods.

    Args:
        sc: Structure constants
        sequence: Jump sequence i_1..i_m over I(Γ, v0)
        profile: When given, the nested sum over walks is evaluated too
        transitions: When given, P_{i_m} ⋯ P_{i_1} δ_0 is extracted too
        report: When it records (S1) and (S2), the convolution and the
            nested sum must agree
        caps: Enumeration caps for the nested sum
        override: Ignore the enumeration caps

    Returns:
        The coefficient vectors

    Raises:
        CrossCheckError: If (S1) and (S2) hold and the methods disagree
    """
    sequence = tuple(sequence)
    convolution = left_nested_convolution(sc, sequence)
    enumeration = (
        walk_coefficients(profile, sequence, caps, override=override)
        if profile is not None
        else None
    )
    matrix_product = (
        extract_from_base(transitions, sequence) if transitions is not None else None
    )
    symmetric = report is not None and report.s1.holds and report.s2.holds
    if symmetric and enumeration is not None and enumeration != convolution:
        raise CrossCheckError(
            f"nested sum {enumeration} differs from convolution {convolution} "
            f"for sequence {sequence}"
        )
    return MultiStepResult(
        sequence=sequence,
        convolution=convolution,
        enumeration=enumeration,
        matrix_product=matrix_product,
    )


def diam2_structure(mu1: int, mu2: int, m: int) -> Diam2Structure:
    """Return the closed-form structure of a diameter-2 graph with (S1), (S2).

    x_1∘x_1 = (1/μ1) x_0 + (m/μ1) x_1 + ((μ1-1-m)/μ1) x_2
    x_1∘x_2 = ((μ1-1-m)/μ2) x_1 + (1 - (μ1-1-m)/μ2) x_2
    x_2∘x_2 = (1/μ2) x_0 + (μ1/μ2 - μ1(μ1-1-m)/μ2²) x_1 + rest x_2

    Args:
        mu1: |S_1(v0)|
        mu2: |S_2(v0)|
        m: |S_1(v_1) ∩ S_1(v0)| for any v_1 in S_1(v0)

    Raises:
        InvalidParametersError: If the parameters are out of range or yield a
            coefficient outside [0, 1]
    """
    if mu1 < 1 or mu2 < 1 or not 0 <= m <= mu1 - 1:
        raise InvalidParametersError(
            f"need mu1 >= 1, mu2 >= 1 and 0 <= m <= mu1 - 1, got ({mu1}, {mu2}, {m})"
        )
    outside = mu1 - 1 - m
    gamma1 = Fraction(outside, mu2)
    beta2 = Fraction(mu1, mu2) - Fraction(mu1 * outside, mu2 * mu2)
    rows = {
        (1, 1): (Fraction(1, mu1), Fraction(m, mu1), Fraction(outside, mu1)),
        (1, 2): (Fraction(0), gamma1, 1 - gamma1),
        (2, 2): (Fraction(1, mu2), beta2, 1 - Fraction(1, mu2) - beta2),
    }
    for key, row in rows.items():
        if any(not 0 <= c <= 1 for c in row):
            raise InvalidParametersError(
                f"parameters ({mu1}, {mu2}, {m}) give x_{key[0]}∘x_{key[1]} "
                "coefficients outside [0, 1]"
            )
    return Diam2Structure(mu1, mu2, m, StructureConstants.from_rows(rows))


def diam2_parameters(
    profile: DistanceProfile, report: SymmetryReport
) -> tuple[int, int, int]:
    """Return (μ1, μ2, m) for a diameter-2 pointed graph with (S1) and (S2).

    Raises:
        PreconditionError: If the graph is not of that kind
    """
    if profile.index_set_size != 3:
        raise PreconditionError(f"index set has size {profile.index_set_size}, not 3")
    if not (report.s1 and report.s2) or report.intersection_tables is None:
        raise PreconditionError("diameter-2 closed form needs (S1) and (S2)")
    mu = profile.sphere_sizes
    return mu[1], mu[2], int(report.intersection_tables[1, 1, 1])


def wildberger_params_from_table(sc: StructureConstants) -> WildbergerParams:
    """Read the order-3 parameters off a commutative table of size 3."""
    if sc.size != 3:
        raise PreconditionError(f"order-3 parameters need a table of size 3, got {sc.size}")
    t = sc.table
    if t[1, 1, 0] == 0 or t[2, 2, 0] == 0:
        raise InvalidParametersError("q_{1,1}^0 and q_{2,2}^0 must be non-zero")
    return WildbergerParams(
        omega1=1 / Fraction(t[1, 1, 0]),
        omega2=1 / Fraction(t[2, 2, 0]),
        alpha1=Fraction(t[1, 1, 1]),
        alpha2=Fraction(t[2, 2, 2]),
        beta1=Fraction(t[1, 1, 2]),
        beta2=Fraction(t[2, 2, 1]),
        gamma1=Fraction(t[1, 2, 1]),
        gamma2=Fraction(t[1, 2, 2]),
    )


def wildberger_params_from_diam2(mu1: int, mu2: int, m: int) -> WildbergerParams:
    """Return the order-3 parameters of the diameter-2 closed form."""
    return wildberger_params_from_table(diam2_structure(mu1, mu2, m).constants)


def order3_table(wp: WildbergerParams) -> StructureConstants:
    """Build the commutative order-3 table encoded by the parameters."""
    return StructureConstants.from_rows(
        {
            (1, 1): (1 / wp.omega1, wp.alpha1, wp.beta1),
            (1, 2): (Fraction(0), wp.gamma1, wp.gamma2),
            (2, 2): (1 / wp.omega2, wp.beta2, wp.alpha2),
        }
    )


def check_wildberger_relations(wp: WildbergerParams) -> CheckResult:
    """Check β1 ω1 = γ1 ω2 and β2 ω2 = γ2 ω1.

    For a commutative order-3 table with normalized rows these two relations
    hold exactly when the table is associative.
    """
    if wp.beta1 * wp.omega1 != wp.gamma1 * wp.omega2:
        return CheckResult.fail(
            "wildberger", (1,), (wp.beta1 * wp.omega1, wp.gamma1 * wp.omega2)
        )
    if wp.beta2 * wp.omega2 != wp.gamma2 * wp.omega1:
        return CheckResult.fail(
            "wildberger", (2,), (wp.beta2 * wp.omega2, wp.gamma2 * wp.omega1)
        )
    return CheckResult.ok()


def associative_order3_params(
    omega1: Fraction | int, omega2: Fraction | int, beta1: Fraction | int
) -> WildbergerParams:
    """Complete (ω1, ω2, β1) to the associative commutative order-3 parameters.

    Raises:
        InvalidParametersError: If some resulting weight falls outside [0, 1]
    """
    omega1, omega2, beta1 = Fraction(omega1), Fraction(omega2), Fraction(beta1)
    if omega1 < 1 or omega2 < 1:
        raise InvalidParametersError("ω1 and ω2 must be at least 1")
    gamma1 = beta1 * omega1 / omega2
    gamma2 = 1 - gamma1
    beta2 = gamma2 * omega1 / omega2
    params = WildbergerParams(
        omega1=omega1,
        omega2=omega2,
        alpha1=1 - 1 / omega1 - beta1,
        alpha2=1 - 1 / omega2 - beta2,
        beta1=beta1,
        beta2=beta2,
        gamma1=gamma1,
        gamma2=gamma2,
    )
    weights = (
        params.alpha1,
        params.alpha2,
        params.beta1,
        params.beta2,
        params.gamma1,
        params.gamma2,
    )
    if any(not 0 <= w <= 1 for w in weights):
        raise InvalidParametersError(
            f"(ω1, ω2, β1) = ({omega1}, {omega2}, {beta1}) has no valid completion"
        )
    return params
