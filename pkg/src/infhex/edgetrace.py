"""Boundary edge sequences: stepping, tracing, periodicity, line visits.

An edge is an ordered pair (a, b) of adjacent tiles with a black and b
vacant.  Walking the boundary with the black side kept on the left visits
a two-way infinite sequence of edges (periodic exactly when the boundary
component is a finite cycle).

Successor rule.  Three tiles meet at every vertex of the tiling.  Stand on
edge (a, b) facing the travel direction (the a-to-b direction rotated 90
degrees counterclockwise, which keeps a on the left).  The forward vertex
is completed by the third tile c = a + rot60ccw(dir(a, b)):

* c vacant: the boundary turns around a, the next edge is (a, c);
* c black:  the boundary continues along c, the next edge is (c, b).

The predecessor rule is the mirror image with the clockwise rotation, so
prev(next(e)) == e for every valid edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .coloring import ColoringSource
from .connectivity import Region
from .grid import Line, Tile, direction_between, line_touch


class Edge(NamedTuple):
    a: Tile  # black side
    b: Tile  # vacant side


def _validate(src: ColoringSource, e: Edge) -> Edge:
    a, b = Tile(*e[0]), Tile(*e[1])
    direction_between(a, b)
    if not src.is_black(a):
        raise ValueError(f"edge {e}: a-side {a} is not black")
    if src.is_black(b):
        raise ValueError(f"edge {e}: b-side {b} is not vacant")
    return Edge(a, b)


def _next(src: ColoringSource, e: Edge) -> Edge:
    d = direction_between(e.a, e.b)
    c = e.a.step(d.rot60ccw)
    if src.is_black(c):
        return Edge(c, e.b)
    return Edge(e.a, c)


def _prev(src: ColoringSource, e: Edge) -> Edge:
    d = direction_between(e.a, e.b)
    c = e.a.step(d.rot60cw)
    if src.is_black(c):
        return Edge(c, e.b)
    return Edge(e.a, c)


def next_edge(src: ColoringSource, e: Edge) -> Edge:
    """Successor edge with black kept on the left."""
    return _next(src, _validate(src, e))


def prev_edge(src: ColoringSource, e: Edge) -> Edge:
    """Predecessor edge; inverse of next_edge."""
    return _prev(src, _validate(src, e))


@dataclass(frozen=True)
class TraceResult:
    """Edges visited by a one-directional trace, plus why it stopped.

    outcome is one of:

    * "periodic":    the start edge reappeared after ``period`` steps;
    * "budget":      max_steps successor steps were taken without closure
                     or region exit;
    * "left_region": an edge with both tiles outside the region was
                     produced at index ``exit_index`` (and recorded last).
    """

    edges: tuple[Edge, ...]
    outcome: str
    period: Optional[int] = None
    exit_index: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "edges": [[[e.a.q, e.a.r], [e.b.q, e.b.r]] for e in self.edges],
            "outcome": self.outcome,
            "period": self.period,
            "exit_index": self.exit_index,
        }


def _outside(region: Region, e: Edge) -> bool:
    return not region.contains(e.a) and not region.contains(e.b)


def trace(src: ColoringSource, e: Edge, direction: str = "forward",
          max_steps: int = 1000, region: Region | None = None) -> TraceResult:
    """Follow the edge sequence one way until closure, exit, or budget.

    direction "forward" walks with black on the left, "backward" the
    reverse.  With a region, the trace stops at the first edge whose two
    tiles both lie outside it.
    """
    e = _validate(src, e)
    if direction == "forward":
        step = _next
    elif direction == "backward":
        step = _prev
    else:
        raise ValueError(f"bad direction {direction!r}")
    edges = [e]
    if region is not None and _outside(region, e):
        return TraceResult(tuple(edges), "left_region", exit_index=0)
    cur = e
    for i in range(1, max_steps + 1):
        cur = step(src, cur)
        if cur == e:
            return TraceResult(tuple(edges), "periodic", period=i)
        edges.append(cur)
        if region is not None and _outside(region, cur):
            return TraceResult(tuple(edges), "left_region", exit_index=i)
    return TraceResult(tuple(edges), "budget")


def line_visits(tr: TraceResult, line: Line) -> int:
    """Number of maximal runs of consecutive edges whose a-tile touches the line.

    For periodic traces a run wrapping from the last edge back to the
    first counts once.
    """
    touches = [line_touch(e.a, line) for e in tr.edges]
    if not touches:
        return 0
    runs = 0
    prev = False
    for t in touches:
        if t and not prev:
            runs += 1
        prev = t
    if tr.outcome == "periodic" and runs > 1 and touches[0] and touches[-1]:
        runs -= 1
    return runs


def turning_number(src: ColoringSource, tr: TraceResult) -> int:
    """Signed full turns of a periodic trace: +1 around a black component
    seen from outside, -1 around an enclosed vacant hole."""
    if tr.outcome != "periodic":
        raise ValueError("turning number is defined for periodic traces only")
    turns = 0
    for e in tr.edges:
        d = direction_between(e.a, e.b)
        c = e.a.step(d.rot60ccw)
        turns += -1 if src.is_black(c) else 1
    assert turns % 6 == 0
    return turns // 6
