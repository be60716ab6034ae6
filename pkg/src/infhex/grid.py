"""Flat-top hexagonal grid: tiles, adjacency, quarter-planes, lines, windows.

Tile (q, r) is the hexagon centered at ``(1.5*q, (2*r + q) * sqrt(3)/2)`` in
units of the hexagon circumradius.  Column q stacks vertically: the north
neighbor of (q, r) is (q, r+1).  The integer ``2*r + q`` (the tile's
``h_index``) names the horizontal line through the tile's center and grows
by 2 per northward step, by 1 per northeast step.

The diagonal tile d_n = (n, 0) anchors two families of quarter-planes:
``Q+_n`` holds every tile reachable from d_n by a lattice translation with
both plane components nonnegative, ``Q-_n`` the mirror image.  Their inner
borders split into a vertical part (the column above/below the corner) and
a staircase part running along the bottom/top.
"""

from __future__ import annotations

import enum
import math
from typing import Iterator, NamedTuple, Union

SQRT3 = math.sqrt(3.0)


class Direction(enum.Enum):
    """One of the six neighbor directions of a flat-top hexagon."""

    N = (0, 1)
    NE = (1, 0)
    SE = (1, -1)
    S = (0, -1)
    SW = (-1, 0)
    NW = (-1, 1)

    @property
    def dq(self) -> int:
        return self.value[0]

    @property
    def dr(self) -> int:
        return self.value[1]

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITE[self]

    @property
    def rot60ccw(self) -> "Direction":
        """The direction rotated 60 degrees counterclockwise."""
        return _ROT60CCW[self]

    @property
    def rot60cw(self) -> "Direction":
        """The direction rotated 60 degrees clockwise."""
        return _ROT60CW[self]


_CCW_CYCLE = [Direction.N, Direction.NW, Direction.SW, Direction.S,
              Direction.SE, Direction.NE]
_ROT60CCW = {d: _CCW_CYCLE[(i + 1) % 6] for i, d in enumerate(_CCW_CYCLE)}
_ROT60CW = {d: _CCW_CYCLE[(i - 1) % 6] for i, d in enumerate(_CCW_CYCLE)}
_OPPOSITE = {d: _CCW_CYCLE[(i + 3) % 6] for i, d in enumerate(_CCW_CYCLE)}

#: Fixed cyclic neighbor order used by every enumeration in this package.
NEIGHBOR_ORDER = (Direction.N, Direction.NE, Direction.SE,
                  Direction.S, Direction.SW, Direction.NW)


class Tile(NamedTuple):
    """Axial coordinates of one hexagon: column q, position r within it."""

    q: int
    r: int

    def step(self, d: Direction) -> "Tile":
        return Tile(self.q + d.dq, self.r + d.dr)

    @property
    def h_index(self) -> int:
        """Index of the horizontal line through this tile's center."""
        return 2 * self.r + self.q

    def center(self) -> tuple[float, float]:
        """Euclidean center in circumradius units."""
        return 1.5 * self.q, self.h_index * (SQRT3 / 2.0)


ORIGIN = Tile(0, 0)


def neighbors(t: Tile) -> list[Tile]:
    """The six adjacent tiles, in the order N, NE, SE, S, SW, NW."""
    return [t.step(d) for d in NEIGHBOR_ORDER]


def direction_between(a: Tile, b: Tile) -> Direction:
    """The direction taking a to the adjacent tile b; raises if not adjacent."""
    delta = (b.q - a.q, b.r - a.r)
    for d in NEIGHBOR_ORDER:
        if d.value == delta:
            return d
    raise ValueError(f"tiles {a} and {b} are not adjacent")


def distance(a: Tile, b: Tile) -> int:
    """Graph distance in the adjacency graph of the tiling."""
    dq = a.q - b.q
    dr = a.r - b.r
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


def diagonal_tile(n: int) -> Tile:
    """The n-th diagonal tile d_n; d_0 is the origin, d_{n+1} = NE(d_n)."""
    return Tile(n, 0)


class QuarterPlane(NamedTuple):
    """Quarter-plane anchored at the diagonal tile d_n.

    sign '+' selects the northeast family (nonnegative translation
    vectors), '-' the southwest one.
    """

    sign: str  # '+' or '-'
    n: int

    @property
    def corner(self) -> Tile:
        return diagonal_tile(self.n)


def qp_member(t: Tile, qp: QuarterPlane) -> bool:
    """Whether t lies in the quarter-plane.

    Membership is closed: tiles whose translation vector has a zero
    component count as members.
    """
    if qp.sign == "+":
        return t.q >= qp.n and t.h_index >= qp.n
    if qp.sign == "-":
        return t.q <= qp.n and t.h_index <= qp.n
    raise ValueError(f"bad quarter-plane sign {qp.sign!r}")


def qp_on_border(t: Tile, qp: QuarterPlane) -> bool:
    """Whether t is a member with at least one non-member neighbor."""
    return qp_member(t, qp) and any(not qp_member(nb, qp) for nb in neighbors(t))


def qp_border(t: Tile, qp: QuarterPlane) -> frozenset[str]:
    """Border parts of the quarter-plane that t belongs to.

    Returns a subset of {"V", "H"}: "V" for the vertical column border
    (the corner tile and everything straight north of it for '+', south
    for '-'), "H" for the staircase border.  The corner tile d_n carries
    both labels; interior tiles carry neither.  Raises ValueError when t
    is not a member.
    """
    if not qp_member(t, qp):
        raise ValueError(f"{t} is not in {qp}")
    parts = set()
    on_v = t.q == qp.n and (t.r >= 0 if qp.sign == "+" else t.r <= 0)
    if on_v:
        parts.add("V")
    if (qp_on_border(t, qp) and not on_v) or t == qp.corner:
        parts.add("H")
    return frozenset(parts)


class Line(NamedTuple):
    """Horizontal or vertical grid line.

    H-line h lies at y = h * sqrt(3)/2, so the line through the center of
    tile t has index t.h_index and the tile's closed extent also touches
    the two lines one index away.  V-line v lies at x = v * 1.5, through
    the centers of column v and the interior of no other column.
    """

    axis: str  # 'H' or 'V'
    index: int


def line_touch(t: Tile, line: Line) -> bool:
    """Closed contact between the hexagon t and the line."""
    if line.axis == "H":
        return abs(line.index - t.h_index) <= 1
    if line.axis == "V":
        return t.q == line.index
    raise ValueError(f"bad line axis {line.axis!r}")


class BallWindow(NamedTuple):
    """All tiles within a graph-distance radius of a center tile."""

    center: Tile
    radius: int

    def contains(self, t: Tile) -> bool:
        return distance(t, self.center) <= self.radius

    def tiles(self) -> Iterator[Tile]:
        cq, cr = self.center
        rad = self.radius
        for dq in range(-rad, rad + 1):
            lo = max(-rad, -dq - rad)
            hi = min(rad, -dq + rad)
            for dr in range(lo, hi + 1):
                yield Tile(cq + dq, cr + dr)

    def size(self) -> int:
        return 1 + 3 * self.radius * (self.radius + 1)

    def reach(self) -> int:
        """Radius of the largest origin-centered ball inside the window."""
        return max(0, self.radius - distance(self.center, ORIGIN))


class RectWindow(NamedTuple):
    """Axis-aligned coordinate rectangle: q_min..q_max x r_min..r_max."""

    q_min: int
    q_max: int
    r_min: int
    r_max: int

    def contains(self, t: Tile) -> bool:
        return self.q_min <= t.q <= self.q_max and self.r_min <= t.r <= self.r_max

    def tiles(self) -> Iterator[Tile]:
        for q in range(self.q_min, self.q_max + 1):
            for r in range(self.r_min, self.r_max + 1):
                yield Tile(q, r)

    def size(self) -> int:
        return max(0, self.q_max - self.q_min + 1) * max(0, self.r_max - self.r_min + 1)

    def reach(self) -> int:
        return max(0, min(self.q_max, -self.q_min, self.r_max, -self.r_min))


Window = Union[BallWindow, RectWindow]


def ball_window(center: Tile = ORIGIN, radius: int = 0) -> BallWindow:
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return BallWindow(Tile(*center), radius)


def rect_window(q_min: int, q_max: int, r_min: int, r_max: int) -> RectWindow:
    return RectWindow(q_min, q_max, r_min, r_max)


def window_tiles(w: Window) -> list[Tile]:
    """Exact enumeration of the window, lexicographic by (q, r)."""
    return list(w.tiles())


def on_window_boundary(w: Window, t: Tile) -> bool:
    """Whether t is in the window and has a neighbor outside it."""
    return w.contains(t) and any(not w.contains(nb) for nb in neighbors(t))
