"""Bounded three-valued evaluators for the winning-condition formula suite.

The winning condition for the black player decomposes into arithmetic
formulas over the board:

* ``phi1``: some black anchor tile t is connected, for every n, to an
  infinite black component of the northeast quarter-plane at depth n and
  to one of the southwest quarter-plane at depth n.
* ``phi1_primed``: as phi1, with "infinite component" replaced by
  "component meeting every deeper quarter-plane".
* ``phi2(sign)``: for every depth, all but finitely many boundary edge
  sequences crossing the quarter-plane border leave the quarter-plane in
  both directions.
* ``phi3(sign)``: some boundary edge sequence eventually stays inside
  every quarter-plane on that side.
* ``phi4`` = phi1 and (phi2+ or phi3+) and (phi2- or phi3-), which is
  equivalent to a black win.

Exact evaluation needs unbounded quantifiers, so every evaluator truncates
them by a Resolution and returns a three-valued Verdict whose TRUE/FALSE
answers carry finite certificates.  Depth convention: the universal depth
quantifiers range over both directions of the diagonal, so depth n pairs
the northeast quarter-plane with corner d_n against the southwest
quarter-plane with corner d_{-n}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .coloring import ColoringSource
from .connectivity import component, in_quarter, in_window, intersect
from .edgetrace import Edge, trace
from .grid import (NEIGHBOR_ORDER, ORIGIN, BallWindow, Direction, QuarterPlane,
                   Tile, Window, ball_window, distance, neighbors,
                   on_window_boundary, qp_member, qp_on_border)
from .verdict import Truth, Verdict, kleene_and, kleene_or


@dataclass(frozen=True)
class Resolution:
    """Budget vector truncating the quantifiers of every evaluator.

    n_max bounds the depth quantifiers, r_max the anchor/exemption ball
    around the origin, size_threshold the component size accepted as
    evidence of infinitude, trace_budget the steps of one edge trace,
    witness_budget the number of candidate anchors or edges examined, and
    window the finite search arena.
    """

    n_max: int = 3
    r_max: int = 8
    size_threshold: int = 64
    trace_budget: int = 10_000
    witness_budget: int = 8
    window: Window = BallWindow(ORIGIN, 128)

    def __post_init__(self):
        for name in ("n_max", "r_max", "size_threshold", "trace_budget", "witness_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        for n in range(self.n_max + 1):
            for corner in (Tile(n, 0), Tile(-n, 0)):
                if not self.window.contains(corner):
                    raise ValueError(
                        f"window must contain the quarter-plane corners up to "
                        f"depth {self.n_max}; {corner} is outside")

    def to_json(self) -> dict:
        w = self.window
        if isinstance(w, BallWindow):
            wj = {"center": [w.center.q, w.center.r], "radius": w.radius}
        else:
            wj = {"q": [w.q_min, w.q_max], "r": [w.r_min, w.r_max]}
        return {"n_max": self.n_max, "r_max": self.r_max,
                "size_threshold": self.size_threshold,
                "trace_budget": self.trace_budget,
                "witness_budget": self.witness_budget, "window": wj}


def depth_quarter(sign: str, depth: int) -> QuarterPlane:
    """Quarter-plane probed at a given depth on one side of the diagonal."""
    if sign == "+":
        return QuarterPlane("+", depth)
    if sign == "-":
        return QuarterPlane("-", -depth)
    raise ValueError(f"bad sign {sign!r}")


def _tile_json(t: Tile) -> list[int]:
    return [t.q, t.r]


def _edge_json(e: Edge) -> list[list[int]]:
    return [_tile_json(e.a), _tile_json(e.b)]


# ---------------------------------------------------------------------------
# component-style evaluators


def eval_psi1(src: ColoringSource, a: Tile, n: int, sign: str, res: Resolution) -> Verdict:
    """Bounded test of "the component of a in the quarter-plane is infinite".

    TRUE when the budgeted search finds size_threshold tiles; FALSE when
    the component closes strictly inside the window (it is then the whole
    component, hence genuinely finite); UNKNOWN when it closes against the
    window edge below the threshold.
    """
    a = Tile(*a)
    qp = QuarterPlane(sign, n)
    if not src.is_black(a):
        raise ValueError(f"anchor {a} is not black")
    if not qp_member(a, qp):
        raise ValueError(f"anchor {a} is outside {qp}")
    region = intersect(in_quarter(qp), in_window(res.window))
    rep = component(src, region, a, budget=res.size_threshold)
    if rep.frontier_open or len(rep.tiles_found) >= res.size_threshold:
        return Verdict.true({"seed": _tile_json(a), "found": len(rep.tiles_found)},
                            "component-at-threshold")
    if _clipped_by_window(src, rep.tiles_found, res.window, qp):
        return Verdict.unknown("component clipped by the window edge")
    return Verdict.false({"seed": _tile_json(a), "size": len(rep.tiles_found)},
                         "closed-finite-component")


def _clipped_by_window(src: ColoringSource, tiles: frozenset[Tile],
                       window: Window, qp: QuarterPlane | None) -> bool:
    """Whether the component could continue on black tiles just outside the window."""
    for t in tiles:
        for nb in neighbors(t):
            if window.contains(nb):
                continue
            if qp is not None and not qp_member(nb, qp):
                continue
            if src.is_black(nb):
                return True
    return False


def _anchor_candidates(src: ColoringSource, res: Resolution) -> tuple[list[Tile], bool]:
    ball = ball_window(ORIGIN, res.r_max)
    blacks = sorted(src.blacks_in(ball), key=lambda t: (distance(t, ORIGIN), t.q, t.r))
    return blacks[:res.witness_budget], len(blacks) > res.witness_budget


def _window_component(src: ColoringSource, res: Resolution, seed: Tile):
    rep = component(src, in_window(res.window), seed, budget=res.window.size() + 1)
    closed = not rep.frontier_open and not _clipped_by_window(
        src, rep.tiles_found, res.window, None)
    return rep.tiles_found, closed


def _subcomponents(tiles: frozenset[Tile], qp: QuarterPlane) -> Iterator[set[Tile]]:
    """Connected components of the restriction of a tile set to a quarter-plane."""
    members = {t for t in tiles if qp_member(t, qp)}
    visited: set[Tile] = set()
    for start in sorted(members):
        if start in visited:
            continue
        comp = {start}
        stack = [start]
        visited.add(start)
        while stack:
            u = stack.pop()
            for d in NEIGHBOR_ORDER:
                nb = u.step(d)
                if nb in members and nb not in visited:
                    visited.add(nb)
                    comp.add(nb)
                    stack.append(nb)
        yield comp


def _eval_anchored(src: ColoringSource, res: Resolution, primed: bool) -> Verdict:
    candidates, truncated = _anchor_candidates(src, res)
    if not candidates:
        return Verdict.false({"searched_radius": res.r_max}, "no-anchor-in-ball")
    examined: list[frozenset[Tile]] = []
    all_certified_finite = True
    for t in candidates:
        known = next((c for c in examined if t in c), None)
        if known is not None:
            continue  # same component as a previously rejected anchor
        tiles, closed = _window_component(src, res, t)
        examined.append(tiles)
        per_depth = {}
        ok = True
        for depth in range(1, res.n_max + 1):
            reps = {}
            for sign in "+-":
                qp = depth_quarter(sign, depth)
                deepest = depth_quarter(sign, res.n_max)
                rep_tile = None
                for sub in _subcomponents(tiles, qp):
                    if primed:
                        if any(qp_member(x, deepest) for x in sub):
                            rep_tile = min(sub)
                            break
                    elif len(sub) >= res.size_threshold:
                        rep_tile = min(sub)
                        break
                if rep_tile is None:
                    ok = False
                    break
                reps["plus" if sign == "+" else "minus"] = _tile_json(rep_tile)
            if not ok:
                break
            per_depth[str(depth)] = reps
        if ok:
            return Verdict.true({"anchor": _tile_json(t), "per_depth": per_depth},
                                "deep-components-both-sides" if primed
                                else "large-components-both-sides")
        if not closed:
            all_certified_finite = False
    if all_certified_finite and not truncated:
        return Verdict.false({"anchors_tried": [_tile_json(t) for t in candidates]},
                             "all-anchor-components-finite")
    return Verdict.unknown("no anchor certified; enumeration or window truncated")


def eval_phi1(src: ColoringSource, res: Resolution) -> Verdict:
    """Anchored two-sided infinite-component condition, truncated."""
    return _eval_anchored(src, res, primed=False)


def eval_phi1_primed(src: ColoringSource, res: Resolution) -> Verdict:
    """Variant requiring components that meet every deeper quarter-plane."""
    return _eval_anchored(src, res, primed=True)


# ---------------------------------------------------------------------------
# edge-sequence evaluators


def _border_walk(qp: QuarterPlane, window: Window) -> Iterator[Tile]:
    """Inner border of the quarter-plane, corner first: the vertical column,
    then the staircase, clipped to the window."""
    corner = qp.corner
    column = Direction.N if qp.sign == "+" else Direction.S
    t = corner
    while window.contains(t):
        yield t
        t = t.step(column)
    steps = ((Direction.NE, Direction.SE) if qp.sign == "+"
             else (Direction.SW, Direction.NW))
    t = corner
    k = 0
    while True:
        t = t.step(steps[k % 2])
        k += 1
        if not window.contains(t):
            return
        yield t


def _border_edges(src: ColoringSource, qp: QuarterPlane, window: Window) -> Iterator[Edge]:
    """Edges with the black and the vacant tile both on the inner border."""
    seen: set[Edge] = set()
    for t in _border_walk(qp, window):
        if not src.is_black(t):
            continue
        for d in NEIGHBOR_ORDER:
            nb = t.step(d)
            if not window.contains(nb) or src.is_black(nb):
                continue
            if not qp_on_border(nb, qp):
                continue
            e = Edge(t, nb)
            if e not in seen:
                seen.add(e)
                yield e


def _phi2_at_depth(src: ColoringSource, sign: str, depth: int, res: Resolution) -> Verdict:
    qp = depth_quarter(sign, depth)
    region = in_quarter(qp)
    separation = 2 * res.r_max
    kept: list[Edge] = []
    non_exit_dists: list[int] = []
    for e in _border_edges(src, qp, res.window):
        fwd = trace(src, e, "forward", res.trace_budget, region)
        if fwd.outcome == "left_region":
            bwd = trace(src, e, "backward", res.trace_budget, region)
            if bwd.outcome == "left_region":
                continue  # exits both ways
        non_exit_dists.append(min(distance(e.a, ORIGIN), distance(e.b, ORIGIN)))
        if all(distance(e.a, w.a) > separation for w in kept):
            kept.append(e)
            if len(kept) >= res.witness_budget:
                return Verdict.false(
                    {"depth": depth, "witnesses": [_edge_json(w) for w in kept],
                     "pairwise_separation": separation},
                    "separated-non-exiting-witnesses")
    r_star = max(non_exit_dists, default=0)
    if r_star <= res.r_max:
        return Verdict.true({"depth": depth, "exemption_radius": r_star},
                            "all-remote-border-traces-exit")
    return Verdict.unknown(f"depth {depth}: non-exiting traces beyond the exemption ball")


def eval_phi2(src: ColoringSource, sign: str, res: Resolution) -> Verdict:
    """Bounded test of "almost every border-crossing edge sequence leaves".

    TRUE needs, at every depth, an exemption radius at most r_max outside
    which every border edge's sequence exits the quarter-plane in both
    directions.  FALSE needs witness_budget non-exiting edges pairwise
    more than 2*r_max apart at some depth, evidence that no finite
    exemption ball can absorb them.
    """
    per_depth = []
    for depth in range(res.n_max + 1):
        v = _phi2_at_depth(src, sign, depth, res)
        if v.is_false():
            return v
        per_depth.append(v)
    if all(v.is_true() for v in per_depth):
        return Verdict.true(
            {"per_depth_exemption": {str(i): v.witness["exemption_radius"]
                                     for i, v in enumerate(per_depth)}},
            "all-remote-border-traces-exit")
    return Verdict.unknown("some depth undecided")


def _seed_edges(src: ColoringSource, res: Resolution) -> list[Edge]:
    seeds: list[Edge] = []
    seen: set[Edge] = set()
    ball = ball_window(ORIGIN, res.r_max)
    blacks = sorted(src.blacks_in(ball), key=lambda t: (distance(t, ORIGIN), t.q, t.r))
    for t in blacks:
        for d in NEIGHBOR_ORDER:
            nb = t.step(d)
            if src.is_black(nb):
                continue
            e = Edge(t, nb)
            if e not in seen:
                seen.add(e)
                seeds.append(e)
                if len(seeds) >= res.witness_budget:
                    return seeds
    return seeds


def eval_phi3(src: ColoringSource, sign: str, res: Resolution) -> Verdict:
    """Bounded search for an edge sequence that eventually stays deep.

    TRUE certificate (heuristic, labeled "deep-window-exit"): some traced
    direction leaves the window while inside the quarter-plane of depth
    max(n_max, reach/2), with a per-depth suffix wholly inside every
    probed quarter-plane.  Requiring the exit itself to be deep rejects
    sequences that merely hug a fixed-depth band all the way to the window
    edge.  FALSE only for boards whose black tiles all sit strictly inside
    the window (every edge sequence is then a finite cycle).
    """
    deep = max(res.n_max, math.ceil(res.window.reach() / 2))
    deep_qp = depth_quarter(sign, deep)
    region = in_window(res.window)
    for e in _seed_edges(src, res):
        for direction in ("forward", "backward"):
            tr = trace(src, e, direction, res.trace_budget, region)
            if tr.outcome != "left_region":
                continue
            if not qp_member(tr.edges[-1].a, deep_qp):
                continue
            suffix_starts = {}
            ok = True
            for depth in range(res.n_max + 1):
                qp = depth_quarter(sign, depth)
                last_bad = -1
                for i, edge in enumerate(tr.edges):
                    if not qp_member(edge.a, qp):
                        last_bad = i
                if last_bad == len(tr.edges) - 1:
                    ok = False
                    break
                suffix_starts[str(depth)] = last_bad + 1
            if ok:
                return Verdict.true(
                    {"edge": _edge_json(e), "direction": direction,
                     "exit_depth": deep, "suffix_starts": suffix_starts},
                    "deep-window-exit")
    blacks = src.blacks_in(res.window)
    if not blacks:
        return Verdict.false({"blacks_in_window": 0}, "no-edges")
    enclosed = all(res.window.contains(nb) for t in blacks for nb in neighbors(t))
    if enclosed:
        return Verdict.false({"blacks_in_window": len(blacks)}, "finite-enclosed")
    return Verdict.unknown("no deep-exiting trace found")


def eval_phi4(src: ColoringSource, res: Resolution) -> Verdict:
    """Kleene combination equivalent to a black win at this resolution."""
    parts = {
        "phi1": eval_phi1(src, res),
        "phi2+": eval_phi2(src, "+", res),
        "phi3+": eval_phi3(src, "+", res),
        "phi2-": eval_phi2(src, "-", res),
        "phi3-": eval_phi3(src, "-", res),
    }
    combined = kleene_and([
        parts["phi1"],
        kleene_or([parts["phi2+"], parts["phi3+"]]),
        kleene_or([parts["phi2-"], parts["phi3-"]]),
    ])
    witness = {name: v.truth.value for name, v in parts.items()}
    if combined.truth is Truth.UNKNOWN:
        return Verdict(Truth.UNKNOWN, None, "undecided-parts")
    return Verdict(combined.truth, witness, combined.certificate)


def eval_phi4_parts(src: ColoringSource, res: Resolution) -> dict[str, Verdict]:
    """The five component verdicts, for reports and consistency checks."""
    return {
        "phi1": eval_phi1(src, res),
        "phi2+": eval_phi2(src, "+", res),
        "phi3+": eval_phi3(src, "+", res),
        "phi2-": eval_phi2(src, "-", res),
        "phi3-": eval_phi3(src, "-", res),
    }


# ---------------------------------------------------------------------------
# finite crossing oracle


def crossing_oracle(src: ColoringSource, n: int, window: Window) -> bool:
    """Finite proxy of the winning condition at depth n.

    True exactly when a black path inside the window joins a black tile of
    the depth-n northeast quarter-plane touching the window boundary to a
    black tile of the depth-n southwest quarter-plane touching the window
    boundary.
    """
    qpp = depth_quarter("+", n)
    qpm = depth_quarter("-", n)
    for corner in (qpp.corner, qpm.corner):
        if not window.contains(corner):
            raise ValueError(f"window must contain the corner {corner}")
    blacks = src.blacks_in(window)
    black_set = set(blacks)
    sources = [t for t in blacks
               if qp_member(t, qpp) and on_window_boundary(window, t)]
    targets = {t for t in blacks
               if qp_member(t, qpm) and on_window_boundary(window, t)}
    if not sources or not targets:
        return False
    from collections import deque
    visited = set(sources)
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        if u in targets:
            return True
        for d in NEIGHBOR_ORDER:
            nb = u.step(d)
            if nb in black_set and nb not in visited and window.contains(nb):
                visited.add(nb)
                queue.append(nb)
    return False
