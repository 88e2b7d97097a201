from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import arb_lists, arb_segment, candidate_squares, hits
from segcover.errors import InvalidInstance, StructuralError
from segcover.geometry import (
    Cover,
    Point,
    Segment,
    UnitSquare,
    covers,
    is_independent_set,
    jointly_coverable,
    linf,
    make_cover,
    right_half_two_square,
    scalar,
    scaled_coords,
    two_square,
    verify_cover,
)

h = F(1, 2)


def seg(x1, y1, x2, y2):
    return Segment.of(x1, y1, x2, y2)


class TestSegment:
    def test_horizontal_normalized_left_to_right(self):
        s = seg(3, 1, 2, 1)
        assert s.l == Point(2, 1) and s.r == Point(3, 1)
        assert s.is_horizontal and s.unit_length

    def test_vertical_l_is_top(self):
        s = seg(0, 0, 0, 1)
        assert s.l == Point(0, 1) and s.r == Point(0, 0)
        assert s.is_vertical

    def test_general(self):
        s = seg(1, 1, 0, 2)
        assert s.kind == "general"
        assert s.l == Point(0, 2)
        assert not s.unit_length

    def test_degenerate_rejected(self):
        with pytest.raises(InvalidInstance):
            seg(1, 1, 1, 1)

    def test_strings_and_floats_are_exact(self):
        assert scalar("0.1") == F(1, 10)
        assert scalar("3/4") == F(3, 4)
        assert scalar(0.5) == h
        with pytest.raises(TypeError):
            scalar(True)

    def test_transpose_and_translate(self):
        s = seg(0, 0, 1, 0)
        assert s.transposed() == seg(0, 0, 0, 1)
        assert s.translated(2, 3) == seg(2, 3, 3, 3)
        assert hash(s) == hash(seg(1, 0, 0, 0))


class TestCovers:
    def test_endpoint_inside(self):
        assert covers(UnitSquare.of(0, 0), seg(h, h, 3 * h, h))

    def test_closed_corner(self):
        assert covers(UnitSquare.of(0, 0), seg(1, 1, 2, 1))

    def test_both_outside(self):
        assert not covers(UnitSquare.of(0, 0), seg(3 * h, h, 5 * h, h))

    def test_interior_crossing_does_not_count(self):
        # the segment passes through the square but neither endpoint is in it
        assert not covers(UnitSquare.of(0, 0), seg(-1, h, 2, h))

    @given(arb_segment(), st.integers(-5, 5), st.integers(-5, 5),
           st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
    def test_integer_translation_invariance(self, s, dx, dy, corner):
        t = UnitSquare(F(corner[0], 4), F(corner[1], 4))
        moved = UnitSquare(t.x + dx, t.y + dy)
        assert covers(t, s) == covers(moved, s.translated(dx, dy))


class TestJointlyCoverable:
    def test_gap_nine_tenths(self):
        assert jointly_coverable(seg(0, 0, 1, 0), seg(F(19, 10), 0, F(29, 10), 0))

    def test_gap_eleven_tenths(self):
        assert not jointly_coverable(seg(0, 0, 1, 0), seg(F(21, 10), 0, F(31, 10), 0))

    def test_self(self):
        s = seg(0, 0, 1, 0)
        assert jointly_coverable(s, s)

    @given(arb_segment(), arb_segment())
    def test_matches_candidate_search(self, a, b):
        found = any(hits(t, a) and hits(t, b) for t in candidate_squares([a, b]))
        assert jointly_coverable(a, b) == found

    @given(arb_segment(), arb_segment())
    def test_two_square_characterisation(self, a, b):
        def in_big(c, p):
            return linf(c, p) <= 1
        via = any(in_big(c, p) for c in a.endpoints for p in b.endpoints)
        assert jointly_coverable(a, b) == via


class TestIndependence:
    def test_empty_and_single(self):
        assert is_independent_set([])
        assert is_independent_set([seg(0, 0, 1, 0)])

    def test_stack(self):
        assert is_independent_set([seg(0, 0, 1, 0), seg(0, 5, 1, 5), seg(0, 10, 1, 10)])

    def test_touching_pair(self):
        assert not is_independent_set([seg(0, 0, 1, 0), seg(2, 0, 3, 0)])


class TestTiles:
    def test_two_square_tiles(self):
        sq = two_square(Point(F(0), F(0)))
        assert sorted(sq) == [UnitSquare(-1, -1), UnitSquare(-1, 0), UnitSquare(0, -1), UnitSquare(0, 0)]

    def test_right_half(self):
        assert right_half_two_square(Point(F(2), F(3))) == [UnitSquare(2, 2), UnitSquare(2, 3)]

    def test_scaled_coords(self):
        den, coords = scaled_coords([seg(F(1, 3), 0, F(4, 3), 0), seg(0, F(1, 2), 0, F(-1, 2))], extra=(F(1, 5),))
        assert den == 30
        assert coords == [(10, 0, 40, 0), (0, 15, 0, -15)]
        assert scaled_coords([]) == (1, [])


class TestVerify:
    def test_left_endpoint_witness(self):
        s = seg(0, 0, 1, 0)
        assert verify_cover([s], Cover([UnitSquare.of(-h, -h)], [0])).feasible

    def test_disjoint_square(self):
        s = seg(0, 0, 1, 0)
        rep = verify_cover([s], Cover([UnitSquare.of(5, 5)], [0]))
        assert not rep.feasible and rep.uncovered == [0]

    def test_unassigned_is_uncovered(self):
        rep = verify_cover([seg(0, 0, 1, 0)], Cover([], [-1]))
        assert rep.uncovered == [0]

    def test_structural_errors(self):
        s = seg(0, 0, 1, 0)
        with pytest.raises(StructuralError):
            verify_cover([s], Cover([UnitSquare.of(0, 0)], []))
        with pytest.raises(StructuralError):
            verify_cover([s], Cover([UnitSquare.of(0, 0)], [3]))
        with pytest.raises(StructuralError):
            verify_cover([s], Cover([UnitSquare.of(0, 0), UnitSquare.of(0, 0)], [0]))

    @given(arb_lists(1, 6))
    def test_make_cover_from_candidates(self, segs):
        cover = make_cover(segs, [UnitSquare(*t) for t in candidate_squares(segs)])
        assert verify_cover(segs, cover).feasible
