"""Lazily computed reduction boards: clopen families, quantifier collapse,
command scheduling, and the generated coloring.

Collapse.  A four-index clopen family X(a,b,c,d) is folded, per (a, b),
into a one-parameter family through greedy *failure trajectories*: walk
rows c = 1, 2, ... and let f(c) be the least d at which the input leaves
X(a,b,c,d).  Row c consumes f(c) + 1 of the d-indices (the passed ones and
the failing one), so the trajectory sums are

    S_k = sum_{c <= k} (f(c) + 1),    k = 0, 1, 2, ...

``is_trajectory_sum(n)`` asks whether n is one of them; the sums are
strictly increasing, which makes the test decidable from finitely many
input bits.  When some row never fails, the sums form a finite set, so
``collapsed_member`` (the complement of the trajectory-sum test) holds for
all large n; when every row fails, the sums are infinite, so it fails
infinitely often.  This is exactly the dichotomy that turns the two inner
quantifier blocks into a single index.

Scheduling.  ``command_set(i, j)`` commands path i toward its relative
level b whenever j is a trajectory sum for (i, b).  A pending command
(b, b') records the commanded level and the best level reached so far.
Per step, each path descends to the relative level

    dsc(i, j) = min(j, max over i' <= i of bmin(i', j))

where bmin is the path's lowest pending command and paths with no pending
commands contribute +infinity.  The saturation makes quiet paths stay on
their anchors and caps every path's descent at the shallowest quiet path
at or below it, which keeps span bottoms ``i + dsc(i, j)`` strictly
increasing in i: the dips of one step nest without ever crossing.

Geometry.  Anchors of path i sit at column L_j, line index 4*(i+j), with
L_0 = 0 and L_{j+1} - L_j = gap(j).  A span descends by southeast steps,
runs east along its bottom line with NE/SE jogs, and climbs back by
northeast steps; the flat part has width gap(j) - 8j - 4 + 8*dsc(i, j),
so gaps of at least 8j + 4 host every possible dip.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Callable, Optional

from .coloring import ColoringSource, _window_h_max, _window_q_range, _window_r_max
from .grid import Tile, Window, direction_between

_INF = math.inf


# ---------------------------------------------------------------------------
# input bit streams


class BitStream:
    """Immutable infinite bit sequence."""

    def bit(self, i: int) -> int:
        raise NotImplementedError

    def prefix(self, n: int) -> str:
        return "".join(str(self.bit(i)) for i in range(n))


class PeriodicBits(BitStream):
    """A literal prefix followed by an eventually-periodic tail."""

    def __init__(self, prefix: str = "", period: str = "0"):
        if not period or set(prefix + period) - {"0", "1"}:
            raise ValueError("prefix and period must be 0/1 strings, period nonempty")
        self._prefix = prefix
        self._period = period

    def bit(self, i: int) -> int:
        if i < 0:
            raise IndexError("bit index must be nonnegative")
        if i < len(self._prefix):
            return int(self._prefix[i])
        return int(self._period[(i - len(self._prefix)) % len(self._period)])

    def to_json(self) -> dict:
        return {"prefix": self._prefix, "period": self._period}


class InstrumentedBits(BitStream):
    """Wrapper counting how much of the underlying stream was consumed."""

    def __init__(self, inner: BitStream):
        self.inner = inner
        self.reads = 0
        self.max_index = -1

    def bit(self, i: int) -> int:
        self.reads += 1
        if i > self.max_index:
            self.max_index = i
        return self.inner.bit(i)


def bits_from_json(obj: dict) -> PeriodicBits:
    return PeriodicBits(obj.get("prefix", ""), obj.get("period", "0"))


# ---------------------------------------------------------------------------
# clopen families


def cantor_pair(m: int, n: int) -> int:
    return (m + n) * (m + n + 1) // 2 + n


def cantor_pair4(a: int, b: int, c: int, d: int) -> int:
    return cantor_pair(cantor_pair(a, b), cantor_pair(c, d))


class ClopenFamily:
    """Indexed sets, each decided by a finite prefix of the input."""

    def prefix_len(self, a: int, b: int, c: int, d: int) -> int:
        raise NotImplementedError

    def member(self, a: int, b: int, c: int, d: int, bits: BitStream) -> bool:
        raise NotImplementedError


class ConstFamily(ClopenFamily):
    def __init__(self, value: bool):
        self.value = bool(value)

    def prefix_len(self, a, b, c, d) -> int:
        return 0

    def member(self, a, b, c, d, bits) -> bool:
        return self.value


class BitTestFamily(ClopenFamily):
    """Membership tests one input bit, indexed by a fixed pairing."""

    def __init__(self, pairing: str = "cantor4"):
        if pairing != "cantor4":
            raise ValueError(f"unknown pairing {pairing!r}")
        self.pairing = pairing

    def prefix_len(self, a, b, c, d) -> int:
        return cantor_pair4(a, b, c, d) + 1

    def member(self, a, b, c, d, bits) -> bool:
        return bits.bit(cantor_pair4(a, b, c, d)) == 1


class TableFamily(ClopenFamily):
    """Finite table of exceptions over a constant default."""

    def __init__(self, entries: dict[tuple[int, int, int, int], bool], default: bool):
        self.entries = dict(entries)
        self.default = bool(default)

    def prefix_len(self, a, b, c, d) -> int:
        return 0

    def member(self, a, b, c, d, bits) -> bool:
        return self.entries.get((a, b, c, d), self.default)


class PredicateFamily(ClopenFamily):
    """Input-independent family given by a predicate; test scaffolding."""

    def __init__(self, fn: Callable[[int, int, int, int], bool]):
        self.fn = fn

    def prefix_len(self, a, b, c, d) -> int:
        return 0

    def member(self, a, b, c, d, bits) -> bool:
        return bool(self.fn(a, b, c, d))


def family_from_json(obj: dict) -> ClopenFamily:
    kind = obj.get("kind")
    if kind == "const":
        return ConstFamily(obj["value"])
    if kind == "bit_test":
        return BitTestFamily(obj.get("pairing", "cantor4"))
    if kind == "table":
        entries = {tuple(e[:4]): bool(e[4]) for e in obj.get("entries", [])}
        return TableFamily(entries, obj.get("default", True))
    raise ValueError(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------------------
# collapse: failure trajectories


def failure_point(fam: ClopenFamily, x: BitStream, a: int, b: int, c: int,
                  bound: int) -> Optional[int]:
    """Least d <= bound at which x leaves X(a,b,c,d); None when none does."""
    for d in range(bound + 1):
        if not fam.member(a, b, c, d, x):
            return d
    return None


def is_trajectory_sum(fam: ClopenFamily, x: BitStream, a: int, b: int, n: int) -> bool:
    """Whether n equals a trajectory sum S_k = sum_{c<=k} (f(c) + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = 0
    c = 1
    while acc < n:
        f = failure_point(fam, x, a, b, c, n - acc - 1)
        if f is None:
            return False
        acc += f + 1
        c += 1
    return acc == n


def collapsed_member(fam: ClopenFamily, x: BitStream, a: int, b: int, n: int,
                     complemented: bool = True) -> bool:
    """The collapsed one-parameter family.

    With the default complementation, membership holds exactly when n is
    not a trajectory sum, which makes ``union over c of intersection over
    d`` equivalent to ``membership for all large n``.  The literal
    uncomplemented reading is available for comparison experiments.
    """
    ts = is_trajectory_sum(fam, x, a, b, n)
    return (not ts) if complemented else ts


def command_set(fam: ClopenFamily, x: BitStream, i: int, j: int) -> set[int]:
    """Relative levels that path i is commanded toward at step j."""
    return {b for b in range(j + 1) if is_trajectory_sum(fam, x, i, b, j)}


# ---------------------------------------------------------------------------
# schedule state machine


def _evolve_one(pending: frozenset, j: int, commands: set[int],
                sat_below: float) -> tuple[frozenset, int, float, frozenset]:
    """One path's step-j update.

    Returns (pending after the step, dsc, bmin-or-inf, merged command set).
    """
    merged = set(pending) | {(b, j) for b in commands}
    bmin = min((b for b, _ in merged), default=_INF)
    sat = max(sat_below, bmin)
    dsc = j if sat >= j else int(sat)
    survivors = set()
    for b, bp in merged:
        if bp <= dsc:
            survivors.add((b, bp))
        elif b < dsc:
            survivors.add((b, dsc))
    return frozenset(survivors), dsc, bmin, frozenset(merged)


@dataclass(frozen=True)
class StepRecord:
    """Derived values of one processed step, for inspection."""

    j: int
    commands: tuple[frozenset, ...]
    merged: tuple[frozenset, ...]
    b_min: tuple[Optional[int], ...]
    dsc: tuple[int, ...]

    def descent_distance(self, i: int) -> int:
        return self.j - self.dsc[i]


@dataclass(frozen=True)
class ReductionState:
    """Pending command pairs entering step j, for paths 0..i_bound-1.

    Steps start at 1: step 0 has no pending commands and no descent, so
    the pair sets entering step 1 are all empty.
    """

    i_bound: int
    j: int
    pending: tuple[frozenset, ...]
    last: Optional[StepRecord] = None


def initial_state(i_bound: int) -> ReductionState:
    if i_bound < 1:
        raise ValueError("need at least one path")
    return ReductionState(i_bound, 1, tuple(frozenset() for _ in range(i_bound)))


def advance(state: ReductionState, fam: ClopenFamily, x: BitStream) -> ReductionState:
    """Process step state.j and return the state entering the next step."""
    j = state.j
    commands = tuple(frozenset(command_set(fam, x, i, j)) for i in range(state.i_bound))
    new_pending = []
    mergeds = []
    bmins = []
    dscs = []
    sat = -_INF
    for i in range(state.i_bound):
        survivors, dsc, bmin, merged = _evolve_one(state.pending[i], j,
                                                   set(commands[i]), sat)
        sat = max(sat, bmin)
        new_pending.append(survivors)
        mergeds.append(merged)
        bmins.append(None if bmin is _INF else int(bmin))
        dscs.append(dsc)
    record = StepRecord(j, commands, tuple(mergeds), tuple(bmins), tuple(dscs))
    return ReductionState(state.i_bound, j + 1, tuple(new_pending), record)


class _TrajectoryRow:
    """Cached greedy trajectory of one (a, b) row; each family membership
    is queried at most once over the cache's lifetime."""

    __slots__ = ("fam", "x", "a", "b", "sums", "probed_to")

    def __init__(self, fam, x, a, b):
        self.fam = fam
        self.x = x
        self.a = a
        self.b = b
        self.sums = [0]       # strictly increasing trajectory sums
        self.probed_to = -1   # all d <= probed_to passed in the next row

    def is_sum(self, n: int) -> bool:
        while self.sums[-1] < n:
            acc = self.sums[-1]
            c = len(self.sums)  # rows consumed so far = k, next row index k+1
            bound = n - acc - 1
            if self.probed_to >= bound:
                return False  # no failure within reach of n
            found = None
            for d in range(self.probed_to + 1, bound + 1):
                if not self.fam.member(self.a, self.b, c, d, self.x):
                    found = d
                    break
                self.probed_to = d
            if found is None:
                return False
            self.sums.append(acc + found + 1)
            self.probed_to = -1
        return n in self.sums  # sums is short; linear scan is fine


class ScheduleCache:
    """Incrementally grown descent schedule over a paths-by-steps rectangle."""

    def __init__(self, fam: ClopenFamily, x: BitStream):
        self.fam = fam
        self.x = x
        self._rows: dict[tuple[int, int], _TrajectoryRow] = {}
        self._pending: list[set] = []
        self._dsc: list[list[int]] = []    # _dsc[i][j], j = 0..steps
        self._sat: list[list[float]] = []  # saturation including path i
        self._steps = 0                    # steps processed so far

    def _row(self, a: int, b: int) -> _TrajectoryRow:
        row = self._rows.get((a, b))
        if row is None:
            row = _TrajectoryRow(self.fam, self.x, a, b)
            self._rows[(a, b)] = row
        return row

    def _commands(self, i: int, j: int) -> set[int]:
        return {b for b in range(j + 1) if self._row(i, b).is_sum(j)}

    def grow(self, n_paths: int, max_step: int) -> None:
        """Ensure dsc(i, j) is computed for i < n_paths, j <= max_step."""
        n_paths = max(n_paths, len(self._dsc))
        max_step = max(max_step, self._steps)
        for i in range(len(self._dsc), n_paths):
            self._pending.append(set())
            self._dsc.append([0])
            self._sat.append([-_INF])
            for j in range(1, self._steps + 1):
                self._step_path(i, j)
        for j in range(self._steps + 1, max_step + 1):
            for i in range(n_paths):
                self._step_path(i, j)
        self._steps = max_step

    def _step_path(self, i: int, j: int) -> None:
        sat_below = self._sat[i - 1][j] if i > 0 else -_INF
        survivors, dsc, bmin, _ = _evolve_one(frozenset(self._pending[i]), j,
                                              self._commands(i, j), sat_below)
        self._pending[i] = set(survivors)
        self._dsc[i].append(dsc)
        self._sat[i].append(max(sat_below, bmin))

    def dsc(self, i: int, j: int) -> int:
        """Relative level path i descends to in span j (j for no descent)."""
        if j == 0:
            return 0
        self.grow(i + 1, j)
        return self._dsc[i][j]


def descent_stats(fam: ClopenFamily, x: BitStream, i: int, steps: int) -> list[int]:
    """For each level offset beta, the number of spans j in [1, steps] where
    path i properly descends (dsc < j) to relative level at most beta."""
    cache = ScheduleCache(fam, x)
    cache.grow(i + 1, steps)
    counts = [0] * (steps + 1)
    for j in range(1, steps + 1):
        d = cache.dsc(i, j)
        if d < j:
            for beta in range(d, steps + 1):
                counts[beta] += 1
    return counts


# ---------------------------------------------------------------------------
# board geometry


@dataclass(frozen=True)
class ReductionGeometry:
    """Column layout of the generated board.

    gap(j) is the column span of step j; it must be even (anchor tiles
    need even columns) and at least 8j + 4 to host a full descent.  The
    default 8j + 10 leaves slack; smaller affine gaps are accepted here
    and reported by the plan validator when some span cannot fit.
    """

    gap_coeff: int = 8
    gap_const: int = 10
    gap_fn: Optional[Callable[[int], int]] = None

    def gap(self, j: int) -> int:
        g = self.gap_fn(j) if self.gap_fn is not None else self.gap_coeff * j + self.gap_const
        if g % 2 != 0 or g < 2:
            raise ValueError(f"gap({j}) = {g}: gaps must be even and positive")
        return g

    def flat_width(self, j: int, dsc: int) -> int:
        """Columns left for the bottom run of a span; negative = no fit."""
        return self.gap(j) - 8 * j - 4 + 8 * dsc

    def anchor(self, i: int, j: int, columns: list[int]) -> Tile:
        col = columns[j]
        return Tile(col, (4 * (i + j) - col) // 2)

    def to_json(self) -> dict:
        if self.gap_fn is not None:
            raise NotImplementedError("callable gaps have no JSON form")
        return {"gap": [self.gap_coeff, self.gap_const]}


def default_geometry() -> ReductionGeometry:
    return ReductionGeometry()


def geometry_from_json(obj: dict) -> ReductionGeometry:
    if not obj or obj == {"kind": "default"}:
        return ReductionGeometry()
    coeff, const = obj["gap"]
    return ReductionGeometry(coeff, const)


def _span_y(c0: int, c1: int, i: int, j: int, dsc: int, q: int) -> int:
    """h-index of path i in column q of span j (c0 = L_j <= q <= c1 = L_{j+1})."""
    top = 4 * (i + j)
    bot = 4 * (i + dsc)
    d = q - c0
    if d <= top - bot:
        return top - d
    next_top = 4 * (i + j + 1)
    up_start = c1 - (next_top - bot)
    if q >= up_start:
        return next_top - (c1 - q)
    off = d - (top - bot)
    return bot + (1 if off % 2 == 1 else 0)


class ReductionColoring(ColoringSource):
    """The coloring generated from (family, input, geometry).

    Black set: the southwest tail { (q, 0) : q < 0 }, the spine
    { (0, r) : r >= 0 }, and one eastward path per index i >= 0 anchored
    at (0, 2i), shaped span by span from the descent schedule.  Queries
    are lazy: a tile at column q with h-index y only ever materializes the
    schedule rectangle up to (y // 4 paths, span(q) steps), so the bits of
    the input consumed by any finite window are finite and computable in
    advance.
    """

    def __init__(self, fam: ClopenFamily, x: BitStream,
                 geom: ReductionGeometry | None = None,
                 i_bound: Optional[int] = None):
        self.fam = fam
        self.bits = x
        self.geom = geom or ReductionGeometry()
        self.i_bound = i_bound
        self.schedule = ScheduleCache(fam, x)
        self._columns = [0]

    def _ensure_columns(self, q: int) -> None:
        cols = self._columns
        while cols[-1] <= q:
            cols.append(cols[-1] + self.geom.gap(len(cols) - 1))

    def span_of(self, q: int) -> int:
        """The step j with L_j <= q < L_{j+1}."""
        if q < 0:
            raise ValueError("spans cover columns q >= 0 only")
        self._ensure_columns(q)
        return bisect_right(self._columns, q) - 1

    def path_height(self, i: int, q: int) -> int:
        """h-index of path i's tile in column q >= 0."""
        if q == 0:
            return 4 * i
        j = self.span_of(q)
        dsc = self.schedule.dsc(i, j)
        if self.geom.flat_width(j, dsc) < 0:
            raise ValueError(
                f"geometry gap({j}) = {self.geom.gap(j)} cannot host the "
                f"descent of path {i} (need {8 * j + 4 - 8 * dsc})")
        return _span_y(self._columns[j], self._columns[j + 1], i, j, dsc, q)

    def is_black(self, t: Tile) -> bool:
        q, r = t
        if q < 0:
            return r == 0
        if q == 0:
            return r >= 0
        y = 2 * r + q
        if y < 0:
            return False
        j = self.span_of(q)
        i_lo = max(0, -((4 * (j + 1) - y) // 4))  # ceil((y - 4(j+1)) / 4)
        i_hi = y // 4
        if self.i_bound is not None:
            i_hi = min(i_hi, self.i_bound - 1)
        if i_hi < i_lo:
            return False
        self.schedule.grow(i_hi + 1, j)
        for i in range(i_lo, i_hi + 1):
            if self.path_height(i, q) == y:
                return True
        return False

    def footprint(self, window: Window) -> tuple[int, int]:
        """Exact (paths, steps) schedule rectangle that querying every tile
        of the window triggers.  Computed from coordinates alone, before any
        board query, so it doubles as the input-bit consumption bound: a
        fresh schedule grown to this rectangle consumes exactly the bits
        that the window's queries do."""
        from .grid import window_tiles
        n_paths = 0
        max_q = 0
        for t in window_tiles(window):
            q, r = t
            y = 2 * r + q
            if q < 1 or y < 0:
                continue
            i_hi = y // 4
            if self.i_bound is not None:
                i_hi = min(i_hi, self.i_bound - 1)
                if i_hi < max(0, -((4 * (self.span_of(q) + 1) - y) // 4)):
                    continue
            n_paths = max(n_paths, i_hi + 1)
            max_q = max(max_q, q)
        return n_paths, self.span_of(max_q) if max_q else 0

    def blacks_in(self, window: Window) -> list[Tile]:
        found = []
        for q in _window_q_range(window):
            if q < 0 and window.contains(Tile(q, 0)):
                found.append(Tile(q, 0))
        for r in range(0, max(_window_r_max(window), -1) + 1):
            if window.contains(Tile(0, r)):
                found.append(Tile(0, r))
        n_paths, _ = self.footprint(window)
        for i in range(n_paths):
            for q in _window_q_range(window):
                if q < 1:
                    continue
                y = self.path_height(i, q)
                t = Tile(q, (y - q) // 2)
                if window.contains(t):
                    found.append(t)
        return sorted(set(found))


def reduction_source(fam: ClopenFamily, x: BitStream,
                     geom: ReductionGeometry | None = None,
                     i_bound: Optional[int] = None) -> ReductionColoring:
    return ReductionColoring(fam, x, geom, i_bound)


# ---------------------------------------------------------------------------
# materialized plans and validation


@dataclass
class ReductionPlan:
    """Finite materialization of the schedule and (when the geometry fits)
    the path tiles for columns 0..L_{n_steps}."""

    n_paths: int
    n_steps: int
    columns: list[int]
    dsc: list[list[int]]                      # dsc[i][j], j = 0..n_steps-1
    tiles: Optional[list[list[Tile]]]         # tiles[i][q] or None when unfit
    gap_failures: list[tuple[int, int, int]]  # (i, j, missing columns)


def materialize_plan(fam: ClopenFamily, x: BitStream, geom: ReductionGeometry,
                     n_paths: int, n_steps: int) -> ReductionPlan:
    cache = ScheduleCache(fam, x)
    cache.grow(n_paths, n_steps - 1)
    columns = [0]
    for j in range(n_steps):
        columns.append(columns[-1] + geom.gap(j))
    dsc = [[cache.dsc(i, j) for j in range(n_steps)] for i in range(n_paths)]
    failures = []
    for i in range(n_paths):
        for j in range(n_steps):
            flat = geom.flat_width(j, dsc[i][j])
            if flat < 0:
                failures.append((i, j, -flat))
    tiles = None
    if not failures:
        tiles = []
        for i in range(n_paths):
            row = []
            for q in range(columns[-1] + 1):
                if q == 0:
                    y = 4 * i
                elif q == columns[-1]:
                    y = 4 * (i + n_steps)  # final anchor
                else:
                    j = bisect_right(columns, q) - 1
                    y = _span_y(columns[j], columns[j + 1], i, j, dsc[i][j], q)
                row.append(Tile(q, (y - q) // 2))
            tiles.append(row)
    return ReductionPlan(n_paths, n_steps, columns, dsc, tiles, failures)


def validate_plan(plan: ReductionPlan, geom: ReductionGeometry) -> list[str]:
    """Structural checks of a materialized plan; violations come back as data."""
    violations = []
    for i, j, missing in plan.gap_failures:
        violations.append(
            f"gap: span (path {i}, step {j}) needs {missing} more columns "
            f"than gap({j}) = {geom.gap(j)} provides")
    for j in range(plan.n_steps):
        prev = None
        for i in range(plan.n_paths):
            d = plan.dsc[i][j]
            if not 0 <= d <= j:
                violations.append(f"schedule: dsc({i},{j}) = {d} outside [0, {j}]")
            if prev is not None and d < prev:
                violations.append(
                    f"nesting: dsc({i},{j}) = {d} shallower-ordered below "
                    f"dsc({i - 1},{j}) = {prev}")
            prev = d
    if plan.tiles is None:
        return violations
    seen: dict[Tile, int] = {}
    for i, row in enumerate(plan.tiles):
        for j, col in enumerate(plan.columns):
            want = geom.anchor(i, j, plan.columns)
            if row[col] != want:
                violations.append(
                    f"anchor: path {i} step {j} sits at {row[col]}, expected {want}")
        for q in range(1, len(row)):
            try:
                direction_between(row[q - 1], row[q])
            except ValueError:
                violations.append(
                    f"connectivity: path {i} breaks between columns {q - 1} and {q}")
                break
        for j in range(plan.n_steps):
            lo = plan.columns[j]
            hi = plan.columns[j + 1]
            y_min = min(row[q].h_index for q in range(lo, hi + 1))
            want = 4 * (i + plan.dsc[i][j])
            if y_min != want:
                violations.append(
                    f"minimal-line: path {i} span {j} bottoms at h-index "
                    f"{y_min}, expected {want}")
        for q, t in enumerate(row):
            if q == 0:
                continue  # anchors on the spine are shared with the trunk
            if t in seen and seen[t] != i:
                violations.append(f"disjointness: paths {seen[t]} and {i} share {t}")
            seen[t] = i
    return violations
