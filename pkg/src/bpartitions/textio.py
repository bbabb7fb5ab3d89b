"""Bit-exact text formats for partitions and peel/patch traces.

One line per partition: blocks joined by " / ", members joined by ",", one
representative per block pair, e.g. ``1 / 2 / 3,11,12 / 4,-7,9,10 / 5,6,-8``.
The empty partition is the literal ``()``.  Output is canonical and unique;
parsing is forgiving about whitespace, accepts either representative of each
block pair, and understands both the ASCII hyphen and the Unicode minus sign.

Traces render either as an aligned table (step, singletons, side points,
remainder) or as machine-readable records: one JSON object per line with a
stable field order, closed by a terminal record for the core or the result.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

from .core import GroundSet, PartitionError, SignedPartition, make_partition
from .peelpatch import PeelTrace, Side, patch_stages, trace_stages


class ParseError(PartitionError):
    """Text does not match the partition grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


_UNICODE_MINUS = chr(0x2212)
_ELEMENT = re.compile(r"-?\d+")


def format_partition(part: SignedPartition) -> str:
    """Canonical one-line text; unique per partition."""
    return str(part)


def parse_partition(
    text: str,
    ground: GroundSet | Iterable[int] | None = None,
) -> SignedPartition:
    """Parse partition text; the inverse of :func:`format_partition`.

    With ``ground`` omitted, the support is inferred from the absolute values
    present.
    """
    s = text.replace(_UNICODE_MINUS, "-")
    n = len(s)

    def skip(i: int) -> int:
        while i < n and s[i].isspace():
            i += 1
        return i

    i = skip(0)
    if i < n and s[i] == "(":
        j = skip(i + 1)
        if j >= n or s[j] != ")":
            raise ParseError("expected ')'", j)
        j = skip(j + 1)
        if j < n:
            raise ParseError("trailing text after '()'", j)
        return make_partition([], ground)
    blocks: list[list[int]] = []
    current: list[int] = []
    while True:
        i = skip(i)
        m = _ELEMENT.match(s, i)
        if not m:
            raise ParseError("expected an element", i)
        value = int(m.group())
        if value == 0:
            raise ParseError("elements must be nonzero", i)
        current.append(value)
        i = skip(m.end())
        if i >= n:
            break
        if s[i] == ",":
            i += 1
            continue
        if s[i] == "/":
            blocks.append(current)
            current = []
            i += 1
            continue
        raise ParseError(f"unexpected character {s[i]!r}", i)
    blocks.append(current)
    return make_partition(blocks, ground)


def set_text(elements: Iterable[int]) -> str:
    """Sorted comma-joined elements, or "-" for the empty set."""
    items = sorted(elements)
    return ",".join(str(t) for t in items) if items else "-"


def _table(header: tuple[str, ...], rows: list[tuple[str, ...]], tail: str) -> str:
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
        for c in range(len(header))
    ]
    lines = [
        " | ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()
        for cells in [header, *rows]
    ]
    lines.append(tail)
    return "\n".join(lines)


def _points_label(side: Side) -> str:
    return "L_j" if side is Side.LEFT else "R_j"


def format_trace(trace: PeelTrace, mode: str = "table") -> str:
    """Render a peel trace; ``table`` for humans, ``records`` for machines.

    Records mode emits one JSON object per line with fields step, singletons,
    side_points, side, remainder, then a final ``{"core": ...}`` record.
    """
    stages = trace_stages(trace)
    pairs = list(zip(trace.layers, stages[1:]))
    if mode == "records":
        lines = [
            json.dumps(
                {
                    "step": layer.step,
                    "singletons": sorted(layer.singletons),
                    "side_points": sorted(layer.side_points),
                    "side": layer.side.value,
                    "remainder": str(stage),
                }
            )
            for layer, stage in pairs
        ]
        lines.append(json.dumps({"core": str(trace.core)}))
        return "\n".join(lines)
    if mode != "table":
        raise ValueError(f"unknown trace format {mode!r}")
    tail = f"core: {trace.core}"
    if not pairs:
        return tail
    rows = [
        (str(layer.step), set_text(layer.singletons), set_text(layer.side_points), str(stage))
        for layer, stage in pairs
    ]
    header = ("j", "S_j", _points_label(trace.layers[0].side), "remainder")
    return _table(header, rows, tail)


def format_patch_stages(trace: PeelTrace, attach: Side, mode: str = "table") -> str:
    """Render the patch stages of a trace, ending with the rebuilt partition.

    Each row pairs a layer with the stage it is about to be patched into,
    from the core upward; the terminal line carries the final partition.
    """
    stages = patch_stages(trace, attach)
    pairs = list(zip(reversed(trace.layers), stages))
    result = stages[-1]
    if mode == "records":
        lines = [
            json.dumps(
                {
                    "step": layer.step,
                    "singletons": sorted(layer.singletons),
                    "side_points": sorted(layer.side_points),
                    "side": layer.side.value,
                    "stage": str(stage),
                }
            )
            for layer, stage in pairs
        ]
        lines.append(json.dumps({"result": str(result)}))
        return "\n".join(lines)
    if mode != "table":
        raise ValueError(f"unknown trace format {mode!r}")
    tail = f"result: {result}"
    if not pairs:
        return tail
    rows = [
        (str(layer.step), set_text(layer.singletons), set_text(layer.side_points), str(stage))
        for layer, stage in pairs
    ]
    header = ("j", "S_j", _points_label(trace.layers[0].side), "stage")
    return _table(header, rows, tail)
