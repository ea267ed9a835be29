"""Exact k-adjacency, aggregation and k-transition matrices.

Every matrix here is either an integer array or a numpy object array of
fractions.Fraction; no floating point is involved. P_k is stored with rows
P_k[i][j] = p_{k,i}^j and acts on column vectors through its transpose,
so the operator identities are checked as operator(h) @ D == D @ A_h.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

import numpy as np

from .exceptions import PreconditionError
from .types import (
    AdjacencyFamily,
    AggregationMap,
    CheckResult,
    DistanceProfile,
    StructureConstants,
    TransitionFamily,
    Witness,
    fraction_matrix_payload,
)

_LOGGER = logging.getLogger(__name__)


def exact(matrix: np.ndarray) -> np.ndarray:
    """Return an object-dtype copy suitable for exact arithmetic."""
    return matrix.astype(object)


def first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, ...] | None:
    """Return the lexicographically first index where two arrays differ."""
    if lhs.shape != rhs.shape:
        raise PreconditionError(f"shape mismatch: {lhs.shape} vs {rhs.shape}")
    differing = np.argwhere(np.asarray(lhs != rhs, dtype=bool))
    if differing.size == 0:
        return None
    return tuple(int(i) for i in differing[0])


def build_adjacency_family(profile: DistanceProfile) -> AdjacencyFamily:
    """Build A^(0)..A^(diam) and the normalized A_k = A^(k) / μ_k.

    Normalized matrices exist for k in I(Γ, v0) and use μ_k = |S_k(v0)|. When
    sphere sizes depend on the vertex the family is flagged
    base-point-relative.
    """
    distances = profile.all_pairs_distances
    matrices = tuple(
        (distances == k).astype(np.int64) for k in range(profile.diameter + 1)
    )
    normalized = tuple(
        exact(matrices[k]) * Fraction(1, mu) for k, mu in enumerate(profile.sphere_sizes)
    )
    sizes = profile.sphere_size_table[:, : profile.index_set_size]
    relative = bool((sizes != sizes[profile.base_point]).any())
    if relative:
        _LOGGER.warning(
            "Sphere sizes vary with the vertex; A_k normalized by |S_k(v%d)|",
            profile.base_point,
        )
    return AdjacencyFamily(
        matrices=matrices,
        normalized=normalized,
        sphere_sizes=profile.sphere_sizes,
        base_point_relative=relative,
    )


def build_aggregation_map(profile: DistanceProfile) -> AggregationMap:
    """Build D with D[i][v] = 1 iff d(v0, v) = i."""
    d_matrix = np.zeros((profile.index_set_size, profile.vertex_count), dtype=np.int64)
    d_matrix[list(profile.distances_from_base), np.arange(profile.vertex_count)] = 1
    return AggregationMap(d_matrix)


def build_transition_family(sc: StructureConstants) -> TransitionFamily:
    """Build P_k[i][j] = p_{k,i}^j from the structure constants."""
    return TransitionFamily(tuple(sc.table[k].copy() for k in range(sc.size)))


def check_doubly_stochastic(fam: AdjacencyFamily) -> CheckResult:
    """Check that every row and column of every A_k sums to 1.

    Witness kind "row-sum" or "column-sum" with indices (k, line) and the
    offending sum.
    """
    per_index: list[bool] = []
    witness: Witness | None = None
    for k, matrix in enumerate(fam.normalized):
        rows = matrix.sum(axis=1)
        cols = matrix.sum(axis=0)
        bad_rows = [i for i, s in enumerate(rows) if s != 1]
        bad_cols = [i for i, s in enumerate(cols) if s != 1]
        per_index.append(not bad_rows and not bad_cols)
        if witness is None and bad_rows:
            witness = Witness("row-sum", (k, bad_rows[0]), (rows[bad_rows[0]],))
        elif witness is None and bad_cols:
            witness = Witness("column-sum", (k, bad_cols[0]), (cols[bad_cols[0]],))
    return CheckResult(witness is None, witness, tuple(per_index))


def check_pd_equals_da(
    fam: AdjacencyFamily, tf: TransitionFamily, d_map: AggregationMap
) -> CheckResult:
    """Check P_h D = D A_h for every h, one flag per h.

    Args:
        fam: Adjacency family (normalized matrices are used)
        tf: Transition family
        d_map: Aggregation map

    Returns:
        Per-index flags; the witness is (h, row, col) with both entries
    """
    d_exact = exact(d_map.d_matrix)
    per_index: list[bool] = []
    witness: Witness | None = None
    for h in range(tf.size):
        lhs = tf.operator(h) @ d_exact
        rhs = d_exact @ fam.normalized[h]
        where = first_mismatch(lhs, rhs)
        per_index.append(where is None)
        if where is not None and witness is None:
            witness = Witness(
                "pd-da", (h, *where), (Fraction(lhs[where]), Fraction(rhs[where]))
            )
    return CheckResult(witness is None, witness, tuple(per_index))


def check_daa_commutation(fam: AdjacencyFamily, d_map: AggregationMap) -> CheckResult:
    """Check D A_k A_l = D A_l A_k for all k <= l.

    Witness (k, l, row, col) with both entries.
    """
    d_exact = exact(d_map.d_matrix)
    projected = [d_exact @ a for a in fam.normalized]
    for k in range(len(fam.normalized)):
        for l in range(k + 1, len(fam.normalized)):  # noqa: E741
            lhs = projected[k] @ fam.normalized[l]
            rhs = projected[l] @ fam.normalized[k]
            where = first_mismatch(lhs, rhs)
            if where is not None:
                return CheckResult.fail("daa", (k, l, *where), (lhs[where], rhs[where]))
    return CheckResult.ok()


def check_adjacency_commutation(fam: AdjacencyFamily) -> CheckResult:
    """Check A^(k) A^(l) = A^(l) A^(k) for all k < l over the integers."""
    for k in range(fam.size):
        for l in range(k + 1, fam.size):  # noqa: E741
            lhs = fam.matrices[k] @ fam.matrices[l]
            rhs = fam.matrices[l] @ fam.matrices[k]
            where = first_mismatch(lhs, rhs)
            if where is not None:
                return CheckResult.fail(
                    "adjacency", (k, l, *where), (int(lhs[where]), int(rhs[where]))
                )
    return CheckResult.ok()


def check_transition_commutation(tf: TransitionFamily) -> CheckResult:
    """Check P_i P_j = P_j P_i for all i < j."""
    for i in range(tf.size):
        for j in range(i + 1, tf.size):
            lhs = tf.matrices[i] @ tf.matrices[j]
            rhs = tf.matrices[j] @ tf.matrices[i]
            where = first_mismatch(lhs, rhs)
            if where is not None:
                return CheckResult.fail(
                    "transition", (i, j, *where), (lhs[where], rhs[where])
                )
    return CheckResult.ok()


def check_transition_algebra(
    tf: TransitionFamily, sc: StructureConstants
) -> CheckResult:
    """Check P_i P_j = Σ_k p_{i,j}^k P_k for all i, j."""
    stacked = np.stack(tf.matrices)
    for i in range(tf.size):
        for j in range(tf.size):
            lhs = tf.matrices[i] @ tf.matrices[j]
            rhs = np.tensordot(sc.table[i, j], stacked, axes=1)
            where = first_mismatch(lhs, rhs)
            if where is not None:
                return CheckResult.fail(
                    "transition-algebra", (i, j, *where), (lhs[where], rhs[where])
                )
    return CheckResult.ok()


def transition_product(tf: TransitionFamily, sequence: Sequence[int]) -> np.ndarray:
    """Return the operator P_{i_m} ⋯ P_{i_1} for a jump sequence i_1..i_m."""
    result = np.identity(tf.size, dtype=np.int64).astype(object)
    for i in sequence:
        result = tf.operator(i) @ result
    return result


def extract_from_base(tf: TransitionFamily, sequence: Sequence[int]) -> tuple[Fraction, ...]:
    """Apply P_{i_m} ⋯ P_{i_1} to δ_0 and return the resulting vector."""
    return tuple(Fraction(v) for v in transition_product(tf, sequence)[:, 0])


def matrices_payload(
    fam: AdjacencyFamily, tf: TransitionFamily, d_map: AggregationMap
) -> dict[str, Any]:
    """Serialize every matrix with exact "num/den" entries."""
    return {
        "adjacency": [m.tolist() for m in fam.matrices],
        "normalized": [fraction_matrix_payload(m) for m in fam.normalized],
        "base_point_relative": fam.base_point_relative,
        "aggregation": d_map.d_matrix.tolist(),
        "transition": [fraction_matrix_payload(m) for m in tf.matrices],
    }
