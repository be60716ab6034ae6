"""Coloring sources: immutable black/vacant membership oracles.

A source answers ``is_black(tile)`` deterministically and may have infinite
support.  ``blacks_in(window)`` enumerates the black tiles of a finite
window; fixture sources override it with closed-form enumeration so large
windows never require a full scan.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .grid import BallWindow, Tile, Window, window_tiles


def _window_q_range(window: Window) -> range:
    if isinstance(window, BallWindow):
        return range(window.center.q - window.radius, window.center.q + window.radius + 1)
    return range(window.q_min, window.q_max + 1)


def _window_r_max(window: Window) -> int:
    if isinstance(window, BallWindow):
        return window.center.r + window.radius
    return window.r_max


def _window_h_max(window: Window) -> int:
    """Largest h-index of any tile in the window."""
    if isinstance(window, BallWindow):
        return window.center.h_index + 2 * window.radius
    return 2 * window.r_max + window.q_max


class ColoringSource:
    """Base class for tile-coloring oracles.  Instances are immutable."""

    def is_black(self, t: Tile) -> bool:
        raise NotImplementedError

    def blacks_in(self, window: Window) -> list[Tile]:
        """Black tiles of the window, sorted by (q, r)."""
        return [t for t in window_tiles(window) if self.is_black(t)]

    def to_json(self) -> dict:
        raise NotImplementedError(f"{type(self).__name__} has no JSON form")


class FiniteSource(ColoringSource):
    """A finitely supported coloring."""

    def __init__(self, blacks: Iterable[Tile]):
        self._blacks = frozenset(Tile(*t) for t in blacks)

    @property
    def blacks(self) -> frozenset[Tile]:
        return self._blacks

    def is_black(self, t: Tile) -> bool:
        return Tile(*t) in self._blacks

    def blacks_in(self, window: Window) -> list[Tile]:
        return sorted(t for t in self._blacks if window.contains(t))

    def to_json(self) -> dict:
        return {"blacks": [[t.q, t.r] for t in sorted(self._blacks)]}


def finite_source(blacks: Iterable[Tile]) -> FiniteSource:
    return FiniteSource(blacks)


class DiagonalSource(ColoringSource):
    """Black exactly on the diagonal tiles d_m = (m, 0), m ranging over Z."""

    def is_black(self, t: Tile) -> bool:
        return t[1] == 0

    def blacks_in(self, window: Window) -> list[Tile]:
        return sorted(t for t in (Tile(q, 0) for q in _window_q_range(window))
                      if window.contains(t))

    def to_json(self) -> dict:
        return {"family": "diagonal", "params": {}}


def diagonal_source() -> DiagonalSource:
    return DiagonalSource()


@dataclass(frozen=True)
class CombParams:
    """Parameters of the comb fixture.

    ``amplitude(b, m)`` gives the height of lobe m of branch b in h-index
    units; it must be strictly increasing in m.  ``lobe_width(b, m)`` gives
    the total column span of lobe m including its trailing base run; it
    must be even and at least ``2 * amplitude + 2``.  The defaults are
    amplitude m + 1 and width 2 * amplitude + 2, identical for every
    branch, which makes all branches exact vertical translates of each
    other 4 h-indices apart (hence pairwise disjoint).
    """

    branch_count_limit: Optional[int] = None
    amplitude: Optional[Callable[[int, int], int]] = None
    lobe_width: Optional[Callable[[int, int], int]] = None


class _Profile:
    """Lazily extended height profile of one branch (or of all, if uniform)."""

    __slots__ = ("heights", "next_lobe")

    def __init__(self):
        self.heights = [0]
        self.next_lobe = 0


class CombSource(ColoringSource):
    """Trunk plus eastward branches that oscillate with growing amplitude.

    The black set is the union of:

    * the southwest tail { (q, 0) : q < 0 },
    * the spine { (0, r) : r >= 0 },
    * for every branch index b >= 0 a one-way path starting on the spine
      at (0, 2b) and moving strictly east, one tile per column.

    Branch b's tile in column q >= 0 sits on h-index ``4b + h_b(q)``.  The
    profile h_b starts at 0 and is walked lobe by lobe: lobe m climbs by
    northeast steps to ``amplitude(b, m)``, descends by southeast steps
    back to 0, then pads the remaining ``lobe_width(b, m) - 2*amplitude``
    columns with NE/SE jog pairs along the base (heights 1, 0, 1, 0, ...).
    Every lobe therefore returns the branch to closed contact with its base
    line (h-index 4b) before the next lobe begins.
    """

    _PROBE_LOBES = 64

    def __init__(self, params: CombParams | None = None):
        self.params = params or CombParams()
        self._uniform = self.params.amplitude is None and self.params.lobe_width is None
        self._profiles: dict[int, _Profile] = {}
        self._validate()

    def _amp(self, b: int, m: int) -> int:
        if self.params.amplitude is None:
            return m + 1
        return self.params.amplitude(b, m)

    def _lobe_width(self, b: int, m: int) -> int:
        amp = self._amp(b, m)
        if self.params.lobe_width is None:
            return 2 * amp + 2
        return self.params.lobe_width(b, m)

    def _validate(self) -> None:
        limit = self.params.branch_count_limit
        if limit is not None and limit < 1:
            raise ValueError("branch_count_limit must be positive")
        for b in (0,) if self._uniform else (0, 1, 2):
            prev = 0
            for m in range(self._PROBE_LOBES):
                amp = self._amp(b, m)
                if amp <= prev or amp <= 0:
                    raise ValueError(
                        f"amplitude schedule must be strictly increasing and "
                        f"positive; branch {b} lobe {m} gives {amp} after {prev}")
                width = self._lobe_width(b, m)
                if width % 2 != 0 or width < 2 * amp + 2:
                    raise ValueError(
                        f"lobe_width must be even and >= 2*amplitude + 2; "
                        f"branch {b} lobe {m} gives {width} for amplitude {amp}")
                prev = amp

    def _heights(self, b: int, q: int) -> list[int]:
        key = -1 if self._uniform else b
        prof = self._profiles.get(key)
        if prof is None:
            prof = _Profile()
            self._profiles[key] = prof
        bb = 0 if self._uniform else b
        heights = prof.heights
        while len(heights) <= q:
            m = prof.next_lobe
            amp = self._amp(bb, m)
            width = self._lobe_width(bb, m)
            heights.extend(range(1, amp + 1))
            heights.extend(range(amp - 1, -1, -1))
            for i in range(width - 2 * amp):
                heights.append(1 if i % 2 == 0 else 0)
            prof.next_lobe = m + 1
        return heights

    def branch_height(self, b: int, q: int) -> int:
        """h-index of branch b's tile in column q >= 0."""
        if q < 0:
            raise ValueError("branches occupy columns q >= 0 only")
        return 4 * b + self._heights(b, q)[q]

    def branch_tile(self, b: int, q: int) -> Tile:
        y = self.branch_height(b, q)
        return Tile(q, (y - q) // 2)

    def is_black(self, t: Tile) -> bool:
        q, r = t
        if q < 0:
            return r == 0
        if q == 0:
            return r >= 0
        y = 2 * r + q
        if y < 0:
            return False
        limit = self.params.branch_count_limit
        if self._uniform:
            rem = y - self._heights(0, q)[q]
            if rem < 0 or rem % 4 != 0:
                return False
            return limit is None or rem // 4 < limit
        top = y // 4
        if limit is not None:
            top = min(top, limit - 1)
        for b in range(top + 1):
            if self.branch_height(b, q) == y:
                return True
        return False

    def blacks_in(self, window: Window) -> list[Tile]:
        found = []
        q_range = _window_q_range(window)
        for q in q_range:
            if q < 0:
                t = Tile(q, 0)
                if window.contains(t):
                    found.append(t)
        for r in range(0, max(_window_r_max(window), -1) + 1):
            t = Tile(0, r)
            if window.contains(t):
                found.append(t)
        y_max = _window_h_max(window)
        limit = self.params.branch_count_limit
        b = 0
        while 4 * b <= y_max and (limit is None or b < limit):
            for q in q_range:
                if q < 1:
                    continue
                t = self.branch_tile(b, q)
                if window.contains(t):
                    found.append(t)
            b += 1
        return sorted(set(found))

    def to_json(self) -> dict:
        params = {}
        if self.params.branch_count_limit is not None:
            params["branch_count_limit"] = self.params.branch_count_limit
        return {"family": "comb", "params": params}


def comb_source(params: CombParams | None = None) -> CombSource:
    return CombSource(params)


class OverlaySource(ColoringSource):
    """Pointwise union of two sources: black where either is black."""

    def __init__(self, a: ColoringSource, b: ColoringSource):
        self.a = a
        self.b = b

    def is_black(self, t: Tile) -> bool:
        return self.a.is_black(t) or self.b.is_black(t)

    def blacks_in(self, window: Window) -> list[Tile]:
        return sorted(set(self.a.blacks_in(window)) | set(self.b.blacks_in(window)))


def overlay(a: ColoringSource, b: ColoringSource) -> OverlaySource:
    return OverlaySource(a, b)


class FullSource(ColoringSource):
    """Every tile black."""

    def is_black(self, t: Tile) -> bool:
        return True

    def to_json(self) -> dict:
        return {"family": "full", "params": {}}


def full_source() -> FullSource:
    return FullSource()


def random_source(radius: int, density: float, seed: int) -> FiniteSource:
    """Seeded random finite coloring on the origin ball of given radius."""
    from .grid import ball_window
    rng = random.Random(seed)
    blacks = [t for t in ball_window(radius=radius).tiles() if rng.random() < density]
    return FiniteSource(blacks)


def source_from_json(obj: dict, seed: int | None = None) -> ColoringSource:
    """Build a source from its JSON description.

    Formats: {"blacks": [[q, r], ...]} for finite boards, and
    {"family": "diagonal"|"comb"|"full"|"random", "params": {...}} for the
    built-in families.  The random family draws from ``seed`` unless its
    params carry an explicit one.
    """
    if "blacks" in obj:
        return FiniteSource(Tile(q, r) for q, r in obj["blacks"])
    family = obj.get("family")
    params = obj.get("params", {}) or {}
    if family == "diagonal":
        return DiagonalSource()
    if family == "comb":
        return CombSource(CombParams(branch_count_limit=params.get("branch_count_limit")))
    if family == "full":
        return FullSource()
    if family == "random":
        use_seed = params.get("seed", seed)
        if use_seed is None:
            raise ValueError("random source needs a seed (params.seed or --seed)")
        return random_source(params.get("radius", 8), params.get("density", 0.45),
                             use_seed)
    raise ValueError(f"unknown source description: {obj!r}")
