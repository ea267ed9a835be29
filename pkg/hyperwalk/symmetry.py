"""Sphere-size and intersection-count symmetry checks."""

from __future__ import annotations

import logging

import numpy as np

from .types import CheckResult, DistanceProfile, Graph, SymmetryReport

_LOGGER = logging.getLogger(__name__)


def check_s1(profile: DistanceProfile) -> CheckResult:
    """Check that |S_i(v)| does not depend on v for every i in I(Γ, v0).

    The witness is (i, v, w) with v < w, first in lexicographic order, and the
    two sphere sizes as values.
    """
    sizes = profile.sphere_size_table
    for i in profile.index_set:
        column = sizes[:, i]
        differing = np.flatnonzero(column != column[0])
        if differing.size:
            w = int(differing[0])
            return CheckResult.fail("s1", (i, 0, w), (int(column[0]), int(column[w])))
    return CheckResult.ok()


def intersection_counts(profile: DistanceProfile) -> np.ndarray:
    """Return counts[v][i][j] = |S_i(v) ∩ S_j(v0)| for i, j in I(Γ, v0)."""
    apd = profile.all_pairs_distances
    n = profile.vertex_count
    size = profile.index_set_size
    base_row = apd[profile.base_point]
    counts = np.zeros((n, profile.diameter + 1, size), dtype=np.int64)
    for v in range(n):
        np.add.at(counts[v], (apd[v], base_row), 1)
    return counts[:, :size, :]


def check_s2(profile: DistanceProfile) -> tuple[CheckResult, np.ndarray | None]:
    """Check that |S_i(v) ∩ S_j(v0)| is constant over v in each sphere S_k(v0).

    Args:
        profile: Distance profile of the pointed graph

    Returns:
        The check result and, when it holds, the intersection tables
        tables[k][i][j] = |S_i(z_k) ∩ S_j(v0)| with z_k the smallest vertex of
        S_k(v0). The witness is (i, j, k, z_k, w) with both counts.
    """
    counts = intersection_counts(profile)
    size = profile.index_set_size
    representatives = [sphere[0] for sphere in profile.spheres]
    for i in range(size):
        for j in range(size):
            for k, sphere in enumerate(profile.spheres):
                values = counts[list(sphere), i, j]
                differing = np.flatnonzero(values != values[0])
                if differing.size:
                    w = sphere[int(differing[0])]
                    return (
                        CheckResult.fail(
                            "s2",
                            (i, j, k, sphere[0], w),
                            (int(values[0]), int(values[differing[0]])),
                        ),
                        None,
                    )
    return CheckResult.ok(), counts[representatives]


def check_distance_regular(
    g: Graph, all_pairs: np.ndarray
) -> tuple[CheckResult, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Check whether |S_i(v) ∩ S_j(w)| depends only on (i, j, d(v, w)).

    This holds exactly when, for every pair at distance k, the numbers
    c_k = |S_{k-1}(v) ∩ S_1(w)| and b_k = |S_{k+1}(v) ∩ S_1(w)| depend only
    on k, which is what is scanned here.

    Args:
        g: Connected graph
        all_pairs: Its all-pairs distance matrix

    Returns:
        The check result and, when it holds, the intersection array
        ((b_0, ..., b_{d-1}), (c_1, ..., c_d)). The witness is (v, w, k) for
        the first pair whose (c_k, b_k) differ from the first pair seen at
        distance k, with both pairs of numbers as values.
    """
    n = g.vertex_count
    diameter = int(all_pairs.max())
    adjacency = np.zeros((n, n), dtype=np.int64)
    for v, row in enumerate(g.adjacency):
        adjacency[v, list(row)] = 1
    width = diameter + 2
    # first (c_k, b_k, v, w) seen at each distance k
    seen: dict[int, tuple[int, int, int, int]] = {}
    for v in range(n):
        row = all_pairs[v]
        onehot = np.zeros((n, width), dtype=np.int64)
        onehot[np.arange(n), row] = 1
        # neighbours[w][t] = number of neighbours of w at distance t from v
        neighbours = adjacency @ onehot
        for w in range(n):
            k = int(row[w])
            c = int(neighbours[w, k - 1]) if k > 0 else 0
            b = int(neighbours[w, k + 1])
            if k not in seen:
                seen[k] = (c, b, v, w)
                continue
            c_ref, b_ref, v_ref, w_ref = seen[k]
            if c != c_ref or b != b_ref:
                _LOGGER.debug(
                    "Pairs (%d, %d) and (%d, %d) at distance %d disagree",
                    v_ref,
                    w_ref,
                    v,
                    w,
                    k,
                )
                witness = CheckResult.fail(
                    "distance-regular", (v, w, k), (c_ref, b_ref, c, b)
                )
                return witness, None
    b_array = tuple(seen[k][1] for k in range(diameter))
    c_array = tuple(seen[k][0] for k in range(1, diameter + 1))
    return CheckResult.ok(), (b_array, c_array)


def symmetry_report(g: Graph, profile: DistanceProfile) -> SymmetryReport:
    """Run (S1), (S2) and distance-regularity checks for a pointed graph."""
    s1 = check_s1(profile)
    s2, tables = check_s2(profile)
    distance_regular, array = check_distance_regular(g, profile.all_pairs_distances)
    _LOGGER.debug(
        "Symmetry at v0=%d: s1=%s s2=%s distance_regular=%s",
        profile.base_point,
        s1.holds,
        s2.holds,
        distance_regular.holds,
    )
    return SymmetryReport(
        s1=s1,
        s2=s2,
        distance_regular=distance_regular,
        intersection_tables=tables,
        intersection_array=array,
    )
