import pytest

from infhex import (CombParams, Line, Tile, ball_window, comb_source,
                    diagonal_source, finite_source, line_touch, overlay,
                    rect_window, source_from_json, window_tiles)
from infhex.coloring import random_source

from tests.oracles import uf_components


class TestFiniteSource:
    def test_empty_is_all_vacant(self):
        src = finite_source([])
        assert not any(src.is_black(t) for t in ball_window(radius=4).tiles())

    def test_singleton(self):
        src = finite_source([Tile(0, 0)])
        assert src.is_black(Tile(0, 0))
        assert not src.is_black(Tile(0, 1))

    def test_json_round_trip(self):
        src = random_source(radius=6, density=0.4, seed=11)
        clone = source_from_json(src.to_json())
        w = ball_window(radius=20)
        for t in window_tiles(w):
            assert src.is_black(t) == clone.is_black(t)

    def test_support_hint_matches_scan(self):
        src = random_source(radius=6, density=0.4, seed=3)
        w = ball_window(radius=9)
        assert src.blacks_in(w) == [t for t in window_tiles(w) if src.is_black(t)]


class TestDiagonal:
    def test_membership(self, diag):
        assert diag.is_black(Tile(5, 0))
        assert not diag.is_black(Tile(5, 1))

    def test_single_path_in_window(self, diag):
        # restricted to a window, the black set is one chain of NE steps
        comps = uf_components(diag, ball_window(radius=10))
        assert len(comps) == 1
        tiles = sorted(comps[0])
        assert tiles == [Tile(q, 0) for q in range(-10, 11)]

    def test_support_hint(self, diag):
        w = ball_window(radius=12)
        assert diag.blacks_in(w) == [t for t in window_tiles(w) if diag.is_black(t)]


class TestComb:
    def test_branch_anchors(self, comb):
        for b in range(6):
            assert comb.is_black(Tile(0, 2 * b))
            assert comb.branch_tile(b, 0) == Tile(0, 2 * b)

    def test_trunk(self, comb):
        assert comb.is_black(Tile(-7, 0))
        assert not comb.is_black(Tile(-7, 1))
        assert comb.is_black(Tile(0, 9))
        assert not comb.is_black(Tile(0, -1))

    def test_default_profile_opening(self, comb):
        assert [comb.branch_height(0, q) for q in range(11)] == \
            [0, 1, 0, 1, 0, 1, 2, 1, 0, 1, 0]

    def test_base_line_returns(self, comb):
        # branch 0 touches its base line in at least 5 distinct columns
        touching = [q for q in range(0, 201)
                    if line_touch(comb.branch_tile(0, q), Line("H", 0))]
        assert len(touching) >= 5

    def test_base_touch_counts_grow(self, comb):
        counts = []
        for bound in (100, 200, 400):
            counts.append(sum(
                line_touch(comb.branch_tile(0, q), Line("H", 0))
                for q in range(bound + 1)))
        assert counts[0] < counts[1] < counts[2]

    def test_branches_disjoint(self, comb):
        for q in range(1, 120):
            heights = [comb.branch_height(b, q) for b in range(30)]
            assert len(set(heights)) == len(heights)

    def test_connected_in_window(self, comb):
        comps = uf_components(comb, ball_window(radius=25))
        assert len(comps) == 1

    def test_one_tile_per_column(self, comb):
        w = rect_window(1, 60, -40, 60)
        blacks = comb.blacks_in(w)
        per_column = {}
        for t in blacks:
            per_column.setdefault(t.q, []).append(t)
        for q, tiles in per_column.items():
            branch_tiles = [t for t in tiles]
            heights = {2 * t.r + t.q for t in branch_tiles}
            assert len(heights) == len(branch_tiles)

    def test_support_hint(self, comb):
        w = ball_window(radius=15)
        assert comb.blacks_in(w) == [t for t in window_tiles(w) if comb.is_black(t)]

    def test_rejects_non_increasing_amplitude(self):
        with pytest.raises(ValueError):
            comb_source(CombParams(amplitude=lambda b, m: 3))
        with pytest.raises(ValueError):
            comb_source(CombParams(amplitude=lambda b, m: max(1, 5 - m)))

    def test_rejects_bad_width(self):
        with pytest.raises(ValueError):
            comb_source(CombParams(lobe_width=lambda b, m: 2 * (m + 1) + 1))

    def test_custom_schedule(self):
        src = comb_source(CombParams(amplitude=lambda b, m: 2 * m + 2,
                                     lobe_width=lambda b, m: 4 * m + 6))
        assert [src.branch_height(0, q) for q in range(7)] == [0, 1, 2, 1, 0, 1, 0]
        assert src.is_black(src.branch_tile(1, 5))

    def test_branch_limit(self):
        src = comb_source(CombParams(branch_count_limit=2))
        assert src.is_black(Tile(1, 0))       # branch 0
        assert src.is_black(Tile(1, 2))       # branch 1
        assert not src.is_black(Tile(1, 4))   # branch 2 cut off


class TestOverlay:
    def test_identity_with_vacant(self, diag, empty):
        both = overlay(diag, empty)
        for t in ball_window(radius=6).tiles():
            assert both.is_black(t) == diag.is_black(t)

    def test_commutative(self, diag):
        extra = finite_source([Tile(0, 5)])
        ab = overlay(diag, extra)
        ba = overlay(extra, diag)
        for t in ball_window(radius=6).tiles():
            assert ab.is_black(t) == ba.is_black(t)

    def test_count(self, diag):
        extra = finite_source([Tile(0, 5)])
        w = ball_window(radius=8)
        merged = overlay(diag, extra)
        assert len(merged.blacks_in(w)) == len(diag.blacks_in(w)) + 1


def test_source_from_json_families():
    assert source_from_json({"family": "diagonal", "params": {}}).is_black(Tile(2, 0))
    assert source_from_json({"family": "comb", "params": {}}).is_black(Tile(0, 4))
    rnd = source_from_json({"family": "random", "params": {"radius": 5}}, seed=7)
    rnd2 = source_from_json({"family": "random", "params": {"radius": 5}}, seed=7)
    w = ball_window(radius=5)
    assert rnd.blacks_in(w) == rnd2.blacks_in(w)
    with pytest.raises(ValueError):
        source_from_json({"family": "random", "params": {}})
    with pytest.raises(ValueError):
        source_from_json({"family": "nope"})
