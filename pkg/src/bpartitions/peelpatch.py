"""Peeling and patching: a statistic-swapping bijection on signed partitions.

Peeling repeatedly strips the singleton pairs together with one chosen end of
every adjacency pair (the left points or the right points), recording each
stripped layer, until neither statistic survives; the residue is the core.

Patching rebuilds a partition from the core with the two roles interchanged.
Each layer's former singletons come back grouped into maximal cyclically
consecutive runs, absorbed into the block of the run's anchor with the
anchor's orientation (the anchor is the run's cyclic predecessor when
attaching on the right, its cyclic successor when attaching on the left),
while the layer's former side points come back as fresh singleton pairs.
When the stage being patched into is empty, the layer is necessarily either
all singletons (rebuilt as a single block) or all side points (rebuilt as all
singletons).

``psi`` composes a left-sided peel with a right-sided patch and swaps the
singleton and adjacency counts; ``psi_inverse`` composes a right-sided peel
with a left-sided patch and undoes it.  Conjugating ``psi`` with
``complement`` gives ``involution``, a self-inverse map that still swaps the
two statistics.

After every patch step the construction is checked: the layer's side points
must be exactly the singleton set of the new stage and the layer's singletons
exactly its side-point set on the attach side.  That exchange is what makes
the inverse peel retrace the stages, so a violation raises
:class:`~bpartitions.core.InternalInvariantError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .core import (
    GroundSet,
    InternalInvariantError,
    PartitionError,
    GroundMismatchError,
    SignedPartition,
    Statistics,
    make_partition,
    require_full_ground,
    complement,
    statistics,
)


class AlreadyCoreError(PartitionError):
    """peel_step was asked to peel a partition with nothing to peel."""


class MalformedLayerError(PartitionError):
    """A peel layer is inconsistent with the stage it is applied to."""


class AnchorMissingError(PartitionError):
    """A run's anchor element is absent from the stage (corrupted trace)."""


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def opposite(self) -> Side:
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True, slots=True)
class PeelLayer:
    """One peeled layer: the singleton elements and the side points removed.

    ``side_points`` holds the left points when ``side`` is LEFT and the right
    points when it is RIGHT.  On a one-element ground the lone element counts
    as both; it is recorded under ``singletons`` only.
    """

    step: int
    singletons: frozenset[int]
    side_points: frozenset[int]
    side: Side


@dataclass(frozen=True, slots=True)
class PeelTrace:
    """The full record of a peel: its layers, the core, and where it started."""

    layers: tuple[PeelLayer, ...]
    core: SignedPartition
    original_ground: GroundSet


def _stage_sets(part: SignedPartition, side: Side) -> tuple[set[int], set[int], Statistics]:
    """Singleton elements and side points of ``part``, plus the raw statistics."""
    stats = statistics(part)
    ts = part.ground.elements
    r = len(ts)
    if side is Side.LEFT:
        points = {ts[j - 1] for j in stats.adjacency_positions}
    else:
        points = {ts[j % r] for j in stats.adjacency_positions} if r else set()
    return set(stats.singleton_elements), points, stats


def _extract(part: SignedPartition, side: Side) -> tuple[frozenset[int], frozenset[int]] | None:
    """The sets a peel step would remove, or None when ``part`` is a core."""
    singles, points, stats = _stage_sets(part, side)
    if stats.singletons == 0 and stats.adjacencies == 0:
        return None
    if len(part.ground) == 1:
        return frozenset(singles), frozenset()
    if points & singles:
        raise InternalInvariantError(
            f"singletons and side points overlap in {part}"
        )
    return frozenset(singles), frozenset(points)


def _strip(part: SignedPartition, removed: frozenset[int]) -> SignedPartition:
    remaining = GroundSet(tuple(t for t in part.ground.elements if t not in removed))
    raw = []
    for block in part.blocks:
        kept = [m for m in block.members if abs(m) not in removed]
        if kept:
            raw.append(kept)
    return make_partition(raw, remaining)


def peel_step(part: SignedPartition, side: Side, step: int = 1) -> tuple[PeelLayer, SignedPartition]:
    """Strip one layer of singletons and side points; return it and the remainder.

    Removal always acts on +x and -x together, so the remainder is again a
    valid symmetric partition without zero-block.
    """
    sets = _extract(part, side)
    if sets is None:
        raise AlreadyCoreError(f"{part} has no singleton or adjacency pairs")
    singles, points = sets
    layer = PeelLayer(step, singles, points, side)
    return layer, _strip(part, singles | points)


def peel(part: SignedPartition, side: Side) -> PeelTrace:
    """Iterate peel steps down to the core.

    A core input yields an empty layer list.  Each step strictly shrinks the
    ground set, so at most r steps occur; the core may be empty.
    """
    layers: list[PeelLayer] = []
    cur = part
    while True:
        sets = _extract(cur, side)
        if sets is None:
            return PeelTrace(tuple(layers), cur, part.ground)
        singles, points = sets
        layers.append(PeelLayer(len(layers) + 1, singles, points, side))
        cur = _strip(cur, singles | points)


def _merged_ground(ground: GroundSet, layer: PeelLayer) -> GroundSet:
    return GroundSet(tuple(sorted(set(ground.elements) | layer.singletons | layer.side_points)))


def _cyclic_runs(elements: Iterable[int], ground: GroundSet) -> list[list[int]]:
    """Maximal cyclically consecutive runs of ``elements``, each in cyclic order."""
    ts = ground.elements
    r = len(ts)
    pos = sorted(ground.position(t) for t in elements)
    runs: list[list[int]] = []
    for p in pos:
        if runs and p == runs[-1][-1] + 1:
            runs[-1].append(p)
        else:
            runs.append([p])
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == r - 1:
        runs[0] = runs.pop() + runs[0]
    return [[ts[p] for p in run] for run in runs]


def _assemble(
    stage: SignedPartition,
    run_elements: frozenset[int],
    singleton_elements: frozenset[int],
    attach: Side,
    target: GroundSet,
) -> SignedPartition:
    """Insert ``run_elements`` next to their anchors and add fresh singletons."""
    ts = target.elements
    if stage.is_empty:
        if not run_elements and len(singleton_elements) == len(ts):
            return make_partition([[t] for t in ts], target)
        if not singleton_elements and len(run_elements) == len(ts):
            return make_partition([list(ts)], target)
        raise MalformedLayerError(
            "an empty stage accepts only an all-singleton or an all-side-point layer"
        )
    raw = [list(b.members) for b in stage.blocks]
    loc: dict[int, tuple[int, int]] = {}
    for bi, block in enumerate(stage.blocks):
        for m in block.members:
            if m > 0:
                loc[m] = (bi, 1)
            else:
                loc[-m] = (bi, -1)
    for run in _cyclic_runs(run_elements, target):
        if attach is Side.RIGHT:
            anchor = target.predecessor(run[0])
        else:
            anchor = target.successor(run[-1])
        if anchor not in loc:
            raise AnchorMissingError(
                f"run {run} is anchored at {anchor}, which is absent from the stage"
            )
        bi, orient = loc[anchor]
        raw[bi].extend(orient * x for x in run)
    for t in singleton_elements:
        raw.append([t])
    return make_partition(raw, target)


def _check_disjoint_cover(stage: SignedPartition, layer: PeelLayer, target: GroundSet) -> None:
    added = layer.singletons | layer.side_points
    if not added:
        raise MalformedLayerError("layer carries no elements")
    if layer.singletons & layer.side_points:
        raise MalformedLayerError("layer singletons and side points overlap")
    base = set(stage.ground.elements)
    if base & added or base | added != set(target.elements):
        raise GroundMismatchError(
            "target ground is not the disjoint union of the stage ground and the layer"
        )


def patch_step(
    stage: SignedPartition,
    layer: PeelLayer,
    attach: Side,
    target_ground: GroundSet,
) -> SignedPartition:
    """Patch one layer into ``stage`` with the two roles interchanged.

    The layer's singletons are absorbed as anchored runs, so they become side
    points of the result; the layer's side points come back as singleton
    pairs.  ``attach`` must be the side opposite the one the layer was peeled
    from.
    """
    if attach is layer.side:
        raise MalformedLayerError("attach side must be opposite the peel side")
    _check_disjoint_cover(stage, layer, target_ground)
    return _assemble(stage, layer.singletons, layer.side_points, attach, target_ground)


def _check_stage(
    stage: SignedPartition,
    layer: PeelLayer,
    points_side: Side,
    expect_singletons: frozenset[int],
    expect_points: frozenset[int],
    what: str,
) -> None:
    # On a one-element ground the lone element is singleton and side point at
    # once, so the two expected sets collapse to the layer's union.
    if len(stage.ground) == 1:
        both = layer.singletons | layer.side_points
        expect_singletons = expect_points = frozenset(both)
    singles, points, _ = _stage_sets(stage, points_side)
    if singles != set(expect_singletons) or points != set(expect_points):
        raise InternalInvariantError(
            f"{what} at layer {layer.step} built a stage with singletons "
            f"{sorted(singles)} and side points {sorted(points)} instead of "
            f"{sorted(expect_singletons)} / {sorted(expect_points)}: {stage}"
        )


def patch_stages(trace: PeelTrace, attach: Side) -> tuple[SignedPartition, ...]:
    """All patch stages from the core up, each one checked.

    Returns k+1 partitions for a k-layer trace: the core first, then the
    stage produced by each layer in reverse peel order; the last entry is the
    rebuilt partition.  Every stage must carry the layer's side points as its
    singleton set and the layer's singletons as its side points on the attach
    side; a violation raises :class:`InternalInvariantError`.
    """
    stages = [trace.core]
    cur = trace.core
    for layer in reversed(trace.layers):
        target = _merged_ground(cur.ground, layer)
        cur = patch_step(cur, layer, attach, target)
        _check_stage(cur, layer, attach, layer.side_points, layer.singletons, "patch")
        stages.append(cur)
    if cur.ground != trace.original_ground:
        raise GroundMismatchError("trace layers do not rebuild the original ground")
    return tuple(stages)


def patch(trace: PeelTrace, attach: Side) -> SignedPartition:
    """Fold every layer of ``trace`` back in; see :func:`patch_stages`."""
    return patch_stages(trace, attach)[-1]


def trace_stages(trace: PeelTrace) -> tuple[SignedPartition, ...]:
    """Reconstruct the peel remainders recorded by a trace.

    The core is un-peeled layer by layer with the original roles: side points
    rejoin the block of their adjacency partner (their cyclic successor for a
    left-sided peel, predecessor for a right-sided one) and singletons come
    back as singleton blocks.  Index j of the result is the remainder after
    layer j; index 0 is the partition the trace was peeled from.
    """
    stages = [trace.core]
    cur = trace.core
    for layer in reversed(trace.layers):
        target = _merged_ground(cur.ground, layer)
        _check_disjoint_cover(cur, layer, target)
        cur = _assemble(cur, layer.side_points, layer.singletons, layer.side, target)
        _check_stage(cur, layer, layer.side, layer.singletons, layer.side_points, "un-peel")
        stages.append(cur)
    if cur.ground != trace.original_ground:
        raise GroundMismatchError("trace layers do not rebuild the original ground")
    return tuple(reversed(stages))


def psi(part: SignedPartition) -> SignedPartition:
    """Swap the two statistics: peel left points, patch back on the right.

    Defined on partitions with full ground {1..n}; the image has the input's
    adjacency count as its singleton count and vice versa.
    """
    require_full_ground(part)
    return patch(peel(part, Side.LEFT), Side.RIGHT)


def psi_inverse(part: SignedPartition) -> SignedPartition:
    """Inverse of :func:`psi`: peel right points, patch back on the left."""
    require_full_ground(part)
    return patch(peel(part, Side.RIGHT), Side.LEFT)


def involution(part: SignedPartition) -> SignedPartition:
    """Complement of ``psi``; applying it twice returns the input."""
    n = require_full_ground(part)
    return complement(psi(part), n)
