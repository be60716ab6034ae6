"""Independent brute-force oracles the package is checked against.

Everything here is deliberately written from scratch against the raw
coordinate rules (no imports of the package's search code beyond the Tile
type and window enumeration), so equality tests pit two genuinely
different implementations against each other.
"""

from __future__ import annotations

from infhex.grid import Tile, window_tiles

# neighbor deltas restated independently of infhex.grid.Direction
DELTAS = ((0, 1), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1))


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


def uf_components(src, window) -> list[frozenset[Tile]]:
    """Connected components of the window's black tiles via union-find."""
    blacks = [t for t in window_tiles(window) if src.is_black(t)]
    black_set = set(blacks)
    uf = UnionFind(blacks)
    for t in blacks:
        for dq, dr in DELTAS:
            nb = Tile(t.q + dq, t.r + dr)
            if nb in black_set:
                uf.union(t, nb)
    groups: dict[Tile, set[Tile]] = {}
    for t in blacks:
        groups.setdefault(uf.find(t), set()).add(t)
    return [frozenset(g) for g in groups.values()]


def uf_crossing(src, n: int, window) -> bool:
    """crossing_oracle recomputed through union-find labeling."""

    def in_plus(t):
        return t.q >= n and 2 * t.r + t.q >= n

    def in_minus(t):
        return t.q <= -n and 2 * t.r + t.q <= -n

    def on_boundary(t):
        return any(not window.contains(Tile(t.q + dq, t.r + dr)) for dq, dr in DELTAS)

    comps = uf_components(src, window)
    for comp in comps:
        has_plus = any(in_plus(t) and on_boundary(t) for t in comp)
        has_minus = any(in_minus(t) and on_boundary(t) for t in comp)
        if has_plus and has_minus:
            return True
    return False


def bfs_ball(radius: int) -> set[Tile]:
    """Ball of the origin grown edge by edge, independent of the distance formula."""
    frontier = {Tile(0, 0)}
    seen = {Tile(0, 0)}
    for _ in range(radius):
        nxt = set()
        for t in frontier:
            for dq, dr in DELTAS:
                nb = Tile(t.q + dq, t.r + dr)
                if nb not in seen:
                    seen.add(nb)
                    nxt.add(nb)
        frontier = nxt
    return seen


def all_edges(src, window) -> set[tuple[Tile, Tile]]:
    """Every (black, vacant) adjacent pair with the black tile in the window."""
    edges = set()
    for t in window_tiles(window):
        if not src.is_black(t):
            continue
        for dq, dr in DELTAS:
            nb = Tile(t.q + dq, t.r + dr)
            if not src.is_black(nb):
                edges.add((t, nb))
    return edges


def qp_member_by_translation(t: Tile, sign: str, n: int, steps: int = 60) -> bool:
    """Quarter-plane membership by enumerating lattice translation vectors.

    Walks all tile-lattice vectors m*NE + k*N with |m|, |k| <= steps,
    keeps those whose plane coordinates (1.5*m, (m/2 + k)*sqrt(3)) lie in
    the closed positive quadrant (negated for the southwest family), and
    tests whether any of them carries the corner onto t.
    """
    import math

    s3 = math.sqrt(3.0)
    eps = 1e-9
    for m in range(0, steps + 1):
        for k in range(-steps, steps + 1):
            x = 1.5 * m
            y = m * (s3 / 2.0) + k * s3
            if x < -eps or y < -eps:
                continue
            cand = Tile(n + m, k) if sign == "+" else Tile(n - m, -k)
            if cand == t:
                return True
    return False
