"""Monte Carlo simulation of sphere-to-sphere random walks."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .const import MAX_WORKERS, Z_SCORE_GATE
from .coordinator import ProductivityCoordinator
from .exceptions import InvalidParametersError, SphereEmptyError
from .hypergroup import left_nested_convolution, walk_coefficients
from .types import (
    ComparisonReport,
    DistanceProfile,
    EmpiricalDistribution,
    EnumerationCaps,
    WalkSpec,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class _SphereLists:
    """Padded S_r(v) lists: members[v, :sizes[v]] is S_r(v)."""

    members: np.ndarray
    sizes: np.ndarray


def _sphere_lists(profile: DistanceProfile, radius: int) -> _SphereLists:
    mask = profile.all_pairs_distances == radius
    sizes = mask.sum(axis=1)
    members = np.zeros((profile.vertex_count, max(int(sizes.max()), 1)), dtype=np.int64)
    for v in range(profile.vertex_count):
        row = np.flatnonzero(mask[v])
        members[v, : row.size] = row
    return _SphereLists(members, sizes)


def split_samples(sample_count: int, workers: int) -> list[int]:
    """Split samples across workers; the first N mod W workers take one extra."""
    base, extra = divmod(sample_count, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def reference_vector(
    coordinator: ProductivityCoordinator,
    sequence: tuple[int, ...],
    caps: EnumerationCaps | None = None,
) -> tuple[Fraction, ...]:
    """Return the exact law of d(v0, v_m) for a jump sequence.

    The left-nested convolution is used when it equals the walk law: under
    (S1) and (S2), or for at most two jumps. Otherwise the nested sum over
    walks is evaluated.
    """
    if coordinator.s1s2 or len(sequence) <= 2:
        return left_nested_convolution(coordinator.structure_constants, sequence)
    _LOGGER.debug("Reference for %s taken from the nested sum", sequence)
    return walk_coefficients(coordinator.profile, sequence, caps or coordinator.caps)


def _run_worker(
    profile: DistanceProfile,
    lists: dict[int, _SphereLists],
    sequence: tuple[int, ...],
    count: int,
    seed: np.random.SeedSequence,
) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    positions = np.full(count, profile.base_point, dtype=np.int64)
    for radius in sequence:
        spheres = lists[radius]
        sizes = spheres.sizes[positions]
        if count and not sizes.all():
            stuck = int(positions[np.flatnonzero(sizes == 0)[0]])
            raise SphereEmptyError(stuck, radius)
        picks = rng.integers(0, sizes) if count else sizes
        positions = spheres.members[positions, picks]
    base_row = profile.all_pairs_distances[profile.base_point]
    return np.bincount(base_row[positions], minlength=profile.index_set_size)


def simulate(
    spec: WalkSpec, caps: EnumerationCaps | None = None
) -> EmpiricalDistribution:
    """Simulate the walk v0 -> v_1 -> ⋯ -> v_m and tally d(v0, v_m).

    Each v_j is drawn uniformly from S_{i_j}(v_{j-1}). Worker w draws from
    PCG64 seeded with SeedSequence(seed).spawn(workers)[w], so counts are
    deterministic for a given (seed, workers).

    Args:
        spec: Walk specification
        caps: Enumeration caps for the exact reference

    Returns:
        Counts per sphere with the exact reference vector

    Raises:
        InvalidParametersError: If the specification is out of range
        SphereEmptyError: If a walk reaches an empty sphere
    """
    coordinator = ProductivityCoordinator(spec.pointed_graph, caps)
    profile = coordinator.profile
    sequence = tuple(spec.sequence)
    if not sequence:
        raise InvalidParametersError("jump sequence is empty")
    if any(not 0 <= i < profile.index_set_size for i in sequence):
        raise InvalidParametersError(
            f"jump sequence {sequence} leaves the index set 0..{profile.index_set_size - 1}"
        )
    if spec.sample_count < 1:
        raise InvalidParametersError("sample count must be positive")
    if not 1 <= spec.workers <= MAX_WORKERS:
        raise InvalidParametersError(f"workers must be in 1..{MAX_WORKERS}")

    start_time = time.perf_counter()
    lists = {radius: _sphere_lists(profile, radius) for radius in set(sequence)}
    seeds = np.random.SeedSequence(spec.seed).spawn(spec.workers)
    shares = split_samples(spec.sample_count, spec.workers)
    with ThreadPoolExecutor(max_workers=spec.workers) as executor:
        partials = list(
            executor.map(
                lambda job: _run_worker(profile, lists, sequence, job[0], job[1]),
                zip(shares, seeds, strict=True),
            )
        )
    counts = np.sum(partials, axis=0)
    reference = reference_vector(coordinator, sequence, caps)
    _LOGGER.debug(
        "Simulated %d walks of %s with %d workers in %.3fs",
        spec.sample_count,
        sequence,
        spec.workers,
        time.perf_counter() - start_time,
    )
    return EmpiricalDistribution(
        counts=tuple(int(c) for c in counts),
        sample_count=spec.sample_count,
        reference=reference,
        seed=spec.seed,
        workers=spec.workers,
    )


def total_variation(emp: EmpiricalDistribution) -> float:
    """Return the total-variation distance between estimate and reference."""
    return 0.5 * sum(
        abs(p - float(q)) for p, q in zip(emp.probabilities, emp.reference, strict=True)
    )


def compare(emp: EmpiricalDistribution, gate: float = Z_SCORE_GATE) -> ComparisonReport:
    """Score each component against its exact probability.

    z_k = (p̂_k - p_k) / sqrt(p_k (1 - p_k) / N). Where the standard error is
    zero, z is 0 if the count is exactly N p_k and infinite otherwise.
    """
    z_scores: list[float] = []
    for count, p, se in zip(emp.counts, emp.reference, emp.standard_errors, strict=True):
        if se == 0:
            z_scores.append(0.0 if count == p * emp.sample_count else math.inf)
        else:
            z_scores.append((count / emp.sample_count - float(p)) / se)
    suspicious = tuple(k for k, z in enumerate(z_scores) if abs(z) > gate)
    if suspicious:
        _LOGGER.debug("Components %s exceed |z| <= %s", suspicious, gate)
    return ComparisonReport(
        z_scores=tuple(z_scores),
        suspicious=suspicious,
        gate=gate,
        passed=not suspicious,
        total_variation=total_variation(emp),
    )
