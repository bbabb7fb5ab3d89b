"""Exhaustive generation of V_n, the zero-block-free signed partitions of {1..n}.

The walk is depth-first and element-major: element i either opens a new block
pair {i} or joins an existing pair, either as +i or as -i relative to the
stored representative.  Choices are tried in a fixed order (new block first,
then pairs in creation order with + before -), which makes the visit order
deterministic.  The total number of visits is sum_j 2**(n-j) * S(n, j), where
j runs over the number of block pairs.

``slice`` exposes the independent subtree roots at a given depth so that
sweeps can be split across workers; completing every slice reproduces the
``for_each`` order with no duplicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import GroundSet, SignedBlock, SignedPartition, make_partition

Visitor = Callable[[SignedPartition], object]


@dataclass(frozen=True, slots=True)
class EnumerationState:
    """An independent subtree root: elements 1..depth already placed."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return sum(len(b) for b in self.blocks)

    def as_partition(self) -> SignedPartition:
        """The partial assignment as a partition over {1..depth}."""
        return make_partition([list(b) for b in self.blocks])


def _run(ground: GroundSet, blocks: list[list[int]], start: int, visitor: Visitor) -> int:
    n = len(ground)
    count = 0
    stop = False

    def descend(i: int) -> None:
        nonlocal count, stop
        if i > n:
            count += 1
            part = SignedPartition(ground, tuple(SignedBlock(tuple(b)) for b in blocks))
            if visitor(part) is False:
                stop = True
            return
        blocks.append([i])
        descend(i + 1)
        blocks.pop()
        if stop:
            return
        for b in blocks:
            b.append(i)
            descend(i + 1)
            b.pop()
            if stop:
                return
            b.append(-i)
            descend(i + 1)
            b.pop()
            if stop:
                return

    descend(start)
    return count


def for_each(n: int, visitor: Visitor) -> int:
    """Visit every partition in V_n exactly once; return the visit count.

    The visitor receives a canonical :class:`SignedPartition` it may keep.
    Returning ``False`` aborts the enumeration; any other value continues it.
    ``n = 0`` yields a single visit, the empty partition.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _run(GroundSet.full(n), [], 1, visitor)


def complete(state: EnumerationState, visitor: Visitor) -> int:
    """Visit every completion of ``state``; same contract as :func:`for_each`."""
    return _run(
        GroundSet.full(state.n),
        [list(b) for b in state.blocks],
        state.depth + 1,
        visitor,
    )


def slice(n: int, prefix_depth: int) -> list[EnumerationState]:
    """Independent subtree roots with elements 1..prefix_depth placed.

    Completing the returned states in order visits each member of V_n exactly
    once, in the same overall order as :func:`for_each`.
    """
    if not 1 <= prefix_depth <= n:
        raise ValueError(f"prefix depth must be in 1..{n}, got {prefix_depth}")
    states: list[EnumerationState] = []
    blocks: list[list[int]] = []

    def descend(i: int) -> None:
        if i > prefix_depth:
            states.append(EnumerationState(n, tuple(tuple(b) for b in blocks)))
            return
        blocks.append([i])
        descend(i + 1)
        blocks.pop()
        for b in blocks:
            b.append(i)
            descend(i + 1)
            b.pop()
            b.append(-i)
            descend(i + 1)
            b.pop()

    descend(1)
    return states
