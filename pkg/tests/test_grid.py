import math

import pytest

from infhex import (Line, QuarterPlane, Tile, ball_window, diagonal_tile,
                    distance, line_touch, neighbors, qp_border, qp_member,
                    rect_window, window_tiles)
from infhex.grid import Direction, qp_on_border

from tests.oracles import bfs_ball, qp_member_by_translation


def test_neighbor_order_at_origin():
    assert neighbors(Tile(0, 0)) == [
        Tile(0, 1), Tile(1, 0), Tile(1, -1), Tile(0, -1), Tile(-1, 0), Tile(-1, 1)]


def test_adjacency_symmetric_radius5():
    for t in ball_window(radius=5).tiles():
        for nb in neighbors(t):
            assert t in neighbors(nb)


def test_direction_opposites_roundtrip():
    t = Tile(3, -2)
    for d in Direction:
        assert t.step(d).step(d.opposite) == t


def test_ball_matches_bfs_oracle():
    for r in (0, 1, 2, 5, 9):
        assert set(ball_window(radius=r).tiles()) == bfs_ball(r)


def test_ball_growth_formula():
    for r in range(13):
        assert len(window_tiles(ball_window(radius=r))) == 1 + 3 * r * (r + 1)
        assert len(bfs_ball(r)) == 1 + 3 * r * (r + 1)


def test_distance_agrees_with_bfs_layers():
    layers = {t: None for t in ()}
    frontier = {Tile(0, 0)}
    seen = {Tile(0, 0): 0}
    for step in range(1, 7):
        nxt = set()
        for t in frontier:
            for nb in neighbors(t):
                if nb not in seen:
                    seen[nb] = step
                    nxt.add(nb)
        frontier = nxt
    for t, d in seen.items():
        assert distance(t, Tile(0, 0)) == d


def test_diagonal_tiles():
    assert diagonal_tile(0) == Tile(0, 0)
    assert diagonal_tile(1) == Tile(1, 0)
    assert diagonal_tile(-3) == Tile(-3, 0)
    for n in range(-5, 5):
        assert diagonal_tile(n + 1) == diagonal_tile(n).step(Direction.NE)


class TestQuarterPlane:
    def test_corner_membership(self):
        for n in (-2, 0, 5):
            assert qp_member(Tile(n, 0), QuarterPlane("+", n))
            assert qp_member(Tile(n, 0), QuarterPlane("-", n))

    def test_west_column_excluded(self):
        for n in (-1, 0, 3):
            assert not qp_member(Tile(n - 1, 100), QuarterPlane("+", n))

    def test_closed_boundary_vector(self):
        for n in (-2, 0, 4):
            assert qp_member(Tile(n + 2, -1), QuarterPlane("+", n))

    @pytest.mark.parametrize("sign", "+-")
    @pytest.mark.parametrize("n", [-2, 0, 1, 3])
    def test_against_translation_enumeration(self, sign, n):
        for t in ball_window(Tile(n, 0), 7).tiles():
            assert qp_member(t, QuarterPlane(sign, n)) == \
                qp_member_by_translation(t, sign, n, steps=20)

    def test_nesting(self):
        for n in range(-4, 4):
            for t in ball_window(radius=10).tiles():
                if qp_member(t, QuarterPlane("+", n + 1)):
                    assert qp_member(t, QuarterPlane("+", n))
                if qp_member(t, QuarterPlane("-", n - 1)):
                    assert qp_member(t, QuarterPlane("-", n))

    def test_point_reflection_symmetry(self):
        # reflecting through the corner's center swaps the two families
        for n in (-3, 0, 2):
            for t in ball_window(radius=12).tiles():
                mirrored = Tile(2 * n - t.q, -t.r)
                assert qp_member(t, QuarterPlane("-", n)) == \
                    qp_member(mirrored, QuarterPlane("+", n))


class TestBorder:
    def test_corner_carries_both_parts(self):
        for n in (-3, 0, 2, 5):
            for sign in "+-":
                assert qp_border(Tile(n, 0), QuarterPlane(sign, n)) == {"V", "H"}

    def test_column_above_corner_is_vertical(self):
        assert qp_border(Tile(2, 3), QuarterPlane("+", 2)) == {"V"}
        assert qp_border(Tile(2, -3), QuarterPlane("-", 2)) == {"V"}

    def test_staircase_sample(self):
        assert qp_border(Tile(4, -1), QuarterPlane("+", 2)) == {"H"}

    def test_nonmember_raises(self):
        with pytest.raises(ValueError):
            qp_border(Tile(0, 0), QuarterPlane("+", 2))

    @pytest.mark.parametrize("n", range(-5, 6))
    def test_border_characterization(self, n):
        # border parts are nonempty exactly on members with an outside neighbor
        qp = QuarterPlane("+", n)
        for t in ball_window(Tile(n, 0), 9).tiles():
            if not qp_member(t, qp):
                continue
            brute = any(not qp_member(nb, qp) for nb in neighbors(t))
            assert bool(qp_border(t, qp)) == brute
            assert qp_on_border(t, qp) == brute

    def test_staircase_shape(self):
        # the horizontal border of the northeast family is (q, ceil((n-q)/2))
        n = 2
        qp = QuarterPlane("+", n)
        for q in range(n, n + 12):
            r = -((q - n) // 2)
            assert "H" in qp_border(Tile(q, r), qp)


class TestLines:
    def test_center_line(self):
        assert line_touch(Tile(0, 0), Line("H", 0))

    def test_edge_contact(self):
        assert line_touch(Tile(0, 0), Line("H", 1))
        assert line_touch(Tile(0, 0), Line("H", -1))
        assert not line_touch(Tile(0, 0), Line("H", 2))

    def test_touched_lines_of_a_sample_tile(self):
        t = Tile(3, 2)
        hs = [h for h in range(-10, 11) if line_touch(t, Line("H", h))]
        vs = [v for v in range(-10, 11) if line_touch(t, Line("V", v))]
        assert hs == [6, 7, 8]
        assert vs == [3]

    def test_touch_counts(self):
        for t in ball_window(radius=6).tiles():
            hs = sum(line_touch(t, Line("H", h)) for h in range(-30, 31))
            vs = sum(line_touch(t, Line("V", v)) for v in range(-30, 31))
            assert hs == 3 and vs == 1

    def test_geometric_h_touch(self):
        # closed intersection of the hexagon with horizontal lines
        s3 = math.sqrt(3.0)
        for t in ball_window(radius=4).tiles():
            _, cy = t.center()
            for h in range(-20, 21):
                geometric = abs(h * s3 / 2 - cy) <= s3 / 2 + 1e-9
                assert line_touch(t, Line("H", h)) == geometric


class TestWindows:
    def test_ball_zero(self):
        assert window_tiles(ball_window(radius=0)) == [Tile(0, 0)]

    def test_ball_one(self):
        assert len(window_tiles(ball_window(radius=1))) == 7

    def test_ball_four(self):
        assert len(window_tiles(ball_window(radius=4))) == 61

    def test_lexicographic_order(self):
        tiles = window_tiles(ball_window(radius=3))
        assert tiles == sorted(tiles)
        rect = window_tiles(rect_window(-2, 2, -1, 1))
        assert rect == sorted(rect) and len(rect) == 15

    def test_rect_contains(self):
        w = rect_window(0, 3, -2, 2)
        assert w.contains(Tile(0, 0)) and not w.contains(Tile(4, 0))
        assert all(w.contains(t) for t in w.tiles())
        assert w.size() == len(window_tiles(w))
