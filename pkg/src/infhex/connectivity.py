"""Budgeted exploration of connected components of black tiles.

All searches are breadth-first with the fixed neighbor order N, NE, SE, S,
SW, NW, so reports are deterministic functions of their arguments.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .coloring import ColoringSource
from .grid import NEIGHBOR_ORDER, QuarterPlane, Tile, Window, qp_member
from .verdict import Verdict


class Region:
    """A decidable set of tiles used to clip component searches."""

    def contains(self, t: Tile) -> bool:
        raise NotImplementedError


class FullPlane(Region):
    def contains(self, t: Tile) -> bool:
        return True


class WindowRegion(Region):
    def __init__(self, window: Window):
        self.window = window

    def contains(self, t: Tile) -> bool:
        return self.window.contains(t)


class QuarterRegion(Region):
    def __init__(self, qp: QuarterPlane):
        self.qp = qp

    def contains(self, t: Tile) -> bool:
        return qp_member(t, self.qp)


class Intersection(Region):
    def __init__(self, *parts: Region):
        self.parts = parts

    def contains(self, t: Tile) -> bool:
        return all(p.contains(t) for p in self.parts)


def full_plane() -> Region:
    return FullPlane()


def in_window(window: Window) -> Region:
    return WindowRegion(window)


def in_quarter(qp: QuarterPlane) -> Region:
    return QuarterRegion(qp)


def intersect(*parts: Region) -> Region:
    return Intersection(*parts)


@dataclass(frozen=True)
class ComponentReport:
    """Result of one budgeted component search.

    ``frontier_open`` is True exactly when the search stopped because the
    budget was exhausted with expansion still possible; when it is False,
    ``tiles_found`` is the whole connected component of the seed in the
    black tiles of the region.
    """

    seed: Tile
    tiles_found: frozenset[Tile]
    frontier_open: bool


def component(src: ColoringSource, region: Region, seed: Tile, budget: int) -> ComponentReport:
    """Breadth-first closure of the seed's component, capped at budget tiles."""
    seed = Tile(*seed)
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if not src.is_black(seed):
        raise ValueError(f"seed {seed} is not black")
    if not region.contains(seed):
        raise ValueError(f"seed {seed} is outside the region")
    found = {seed}
    queue = deque([seed])
    frontier_open = False
    while queue and not frontier_open:
        u = queue.popleft()
        for d in NEIGHBOR_ORDER:
            nb = u.step(d)
            if nb in found or not region.contains(nb) or not src.is_black(nb):
                continue
            if len(found) >= budget:
                frontier_open = True
                break
            found.add(nb)
            queue.append(nb)
    return ComponentReport(seed, frozenset(found), frontier_open)


def component_at_least(src: ColoringSource, region: Region, seed: Tile,
                       m: int, budget: int) -> Verdict:
    """Decide whether the seed's component in the region has >= m tiles.

    Requires budget >= m, which forces a decision: either m tiles are
    found, or the component closes below m.
    """
    if budget < m:
        raise ValueError(f"budget {budget} is smaller than the threshold {m}")
    report = component(src, region, seed, budget)
    if len(report.tiles_found) >= m:
        return Verdict.true({"seed": list(report.seed), "found": len(report.tiles_found)},
                            "component-reached-threshold")
    return Verdict.false({"seed": list(report.seed), "found": len(report.tiles_found)},
                         "component-closed-below-threshold")


def components_meeting(src: ColoringSource, window: Window,
                       targets: Iterable[Tile]) -> list[ComponentReport]:
    """One report per distinct in-window component holding a black target."""
    targets = sorted(Tile(*t) for t in targets)
    region = WindowRegion(window)
    budget = window.size() + 1
    for t in targets:
        if not window.contains(t):
            raise ValueError(f"target {t} is outside the window")
    reports: list[ComponentReport] = []
    for t in targets:
        if not src.is_black(t):
            continue
        if any(t in rep.tiles_found for rep in reports):
            continue
        reports.append(component(src, region, t, budget))
    return reports
