import pytest
from hypothesis import given, settings, strategies as st

from transversals.core import (
    Line3,
    Plane,
    Segment3,
    classify_pair,
    line_meets_segment,
    line_plane_meet,
    line_point_dir,
    line_through,
    plane_meet,
    plane_through_point_line,
    plane_through_points,
    point_in_plane,
    point_on_line,
    reciprocal_product,
    segment_contains_point,
    segment_plane_meet,
    supporting_line,
    v_add,
    v_cross,
    v_scale,
    v_sub,
    vec,
)
from transversals.errors import CoincidentPoints, InvalidLine, InvalidSegment
from transversals.scalars import rat

X_AXIS = line_through(vec(0, 0, 0), vec(1, 0, 0))
Y_AXIS = line_through(vec(0, 0, 0), vec(0, 1, 0))
Z_AXIS = line_through(vec(0, 0, 0), vec(0, 0, 1))


def det4(p1, q1, p2, q2):
    """Independent oracle for the side operator: det of the four rows (p,1)."""
    rows = [list(p1) + [rat(1)], list(q1) + [rat(1)],
            list(p2) + [rat(1)], list(q2) + [rat(1)]]

    def det(m):
        if len(m) == 1:
            return m[0][0]
        total = rat(0)
        for j in range(len(m)):
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * det(minor)
            total += term if j % 2 == 0 else -term
        return total

    return det(rows)


coord = st.integers(-6, 6).map(rat)
point = st.tuples(coord, coord, coord)


def lines_from(p, q, r, s):
    if p == q or r == s:
        return None
    return line_through(p, q), line_through(r, s), (p, q, r, s)


class TestLineBasics:
    def test_axis_through_origin_has_zero_moment(self):
        assert X_AXIS.direction == vec(1, 0, 0)
        assert X_AXIS.moment == vec(0, 0, 0)

    def test_cross_product_example(self):
        l = line_through(vec(0, 0, 1), vec(0, 1, 1))
        assert l.direction == vec(0, 1, 0)
        assert l.moment == vec(-1, 0, 0)

    def test_line_equality_orientation_free(self):
        assert line_through(vec(0, 0, 1), vec(0, 1, 1)) == line_through(
            vec(0, 1, 1), vec(0, 0, 1)
        )
        assert line_through(vec(0, 0, 0), vec(2, 0, 0)) == X_AXIS

    def test_coincident_points_raise(self):
        with pytest.raises(CoincidentPoints):
            line_through(vec(1, 2, 3), vec(1, 2, 3))

    def test_pluecker_constraint_enforced(self):
        with pytest.raises(InvalidLine):
            Line3(vec(1, 0, 0), vec(1, 0, 0))

    @given(point, point)
    def test_pluecker_relation_holds(self, p, q):
        if p == q:
            return
        l = line_through(p, q)
        assert (
            l.direction[0] * l.moment[0]
            + l.direction[1] * l.moment[1]
            + l.direction[2] * l.moment[2]
            == 0
        )


class TestReciprocalProduct:
    def test_concurrent_axes(self):
        assert reciprocal_product(X_AXIS, Y_AXIS) == 0

    def test_skew_example_value(self):
        l2 = line_through(vec(0, 0, 1), vec(0, 1, 1))
        assert reciprocal_product(X_AXIS, l2) == -1

    def test_against_determinant_oracle(self):
        l2 = line_through(vec(0, 0, 1), vec(0, 1, 1))
        d = det4(vec(0, 0, 0), vec(1, 0, 0), vec(0, 0, 1), vec(0, 1, 1))
        assert abs(d) == abs(reciprocal_product(X_AXIS, l2)) == 1

    def test_scaling_preserves_zero_set(self):
        l2 = line_through(vec(0, 0, 1), vec(0, 1, 1))
        scaled = Line3(v_scale(rat(3), l2.direction), v_scale(rat(3), l2.moment))
        assert reciprocal_product(X_AXIS, scaled) == 3 * reciprocal_product(
            X_AXIS, l2
        )

    @settings(max_examples=300)
    @given(point, point, point, point)
    def test_zero_iff_coplanar_matches_det(self, p, q, r, s):
        made = lines_from(p, q, r, s)
        if made is None:
            return
        l1, l2, pts = made
        rp = reciprocal_product(l1, l2)
        d = det4(*pts)
        assert (rp == 0) == (d == 0)
        verdict = classify_pair(l1, l2)
        assert (verdict[0] == "skew") == (rp != 0)


class TestClassifyPair:
    def test_intersecting(self):
        verdict = classify_pair(X_AXIS, Y_AXIS)
        assert verdict == ("intersecting", vec(0, 0, 0))

    def test_parallel(self):
        other = line_through(vec(0, 0, 1), vec(1, 0, 1))
        assert classify_pair(X_AXIS, other) == ("parallel",)

    def test_skew(self):
        other = line_through(vec(0, 0, 1), vec(0, 1, 1))
        assert classify_pair(X_AXIS, other) == ("skew",)

    def test_identical(self):
        other = line_through(vec(3, 0, 0), vec(7, 0, 0))
        assert classify_pair(X_AXIS, other) == ("identical",)

    @settings(max_examples=200)
    @given(point, point, point, point)
    def test_symmetry(self, p, q, r, s):
        made = lines_from(p, q, r, s)
        if made is None:
            return
        l1, l2, _ = made
        a = classify_pair(l1, l2)
        b = classify_pair(l2, l1)
        assert a[0] == b[0]
        if a[0] == "intersecting":
            assert a[1] == b[1]


class TestSegments:
    def test_point_segment_must_be_closed(self):
        with pytest.raises(InvalidSegment):
            Segment3(vec(1, 1, 1), vec(1, 1, 1), closed_a=False)

    def test_supporting_line_nondegenerate(self):
        s = Segment3(vec(0, 0, 0), vec(2, 0, 0))
        assert supporting_line(s) == X_AXIS

    def test_supporting_line_of_point_is_vertical(self):
        s = Segment3(vec(1, 2, 3), vec(1, 2, 3))
        l = supporting_line(s)
        assert l == line_point_dir(vec(1, 2, 3), vec(0, 0, 1))
        s0 = Segment3(vec(0, 0, 0), vec(0, 0, 0))
        assert supporting_line(s0) == Z_AXIS

    def test_meets_interior(self):
        s = Segment3(vec(0, -1, 0), vec(0, 1, 0))
        assert line_meets_segment(X_AXIS, s)
        s_open = Segment3(vec(0, -1, 0), vec(0, 1, 0), False, False)
        assert line_meets_segment(X_AXIS, s_open)

    def test_open_endpoint_excluded(self):
        s = Segment3(vec(0, 0, 0), vec(0, 1, 0), closed_a=False)
        assert not line_meets_segment(X_AXIS, s)
        s_closed = Segment3(vec(0, 0, 0), vec(0, 1, 0))
        assert line_meets_segment(X_AXIS, s_closed)

    def test_line_containing_segment_meets_it(self):
        s = Segment3(vec(1, 0, 0), vec(4, 0, 0), False, False)
        assert line_meets_segment(X_AXIS, s)

    def test_point_segment_membership(self):
        s = Segment3(vec(1, 0, 0), vec(1, 0, 0))
        assert line_meets_segment(X_AXIS, s)
        assert not line_meets_segment(Y_AXIS, s)

    @settings(max_examples=200)
    @given(point, point, point)
    def test_supporting_line_meets_its_segment(self, a, b, p):
        if a == b:
            return
        s = Segment3(a, b)
        assert line_meets_segment(supporting_line(s), s)

    @settings(max_examples=200)
    @given(point, point, st.fractions(-2, 3), st.booleans(), st.booleans())
    def test_meets_agrees_with_param_membership(self, a, b, t, ca, cb):
        """Oracle: pick a point by parameter, build a line through it."""
        if a == b:
            return
        t = rat(t.numerator, t.denominator)
        s = Segment3(a, b, ca, cb)
        p = v_add(a, v_scale(t, v_sub(b, a)))
        probe = line_point_dir(p, vec(1, 2, 5))  # generic direction
        on_seg = segment_contains_point(s, p)
        if v_cross(vec(1, 2, 5), v_sub(b, a)) == vec(0, 0, 0):
            return  # probe parallel to the segment: different predicate path
        assert line_meets_segment(probe, s) == on_seg


class TestPlanes:
    def test_plane_through_points(self):
        pl = plane_through_points(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0))
        assert point_in_plane(vec(5, -3, 0), pl)
        assert not point_in_plane(vec(0, 0, 1), pl)

    def test_plane_point_line(self):
        pl = plane_through_point_line(vec(0, 0, 1), X_AXIS)
        assert point_in_plane(vec(7, 0, 0), pl)
        assert point_in_plane(vec(0, 0, 1), pl)
        assert not point_in_plane(vec(0, 1, 0), pl)

    def test_plane_meet_axes(self):
        pl1 = Plane(vec(0, 0, 1), rat(0))  # z = 0
        pl2 = Plane(vec(0, 1, 0), rat(0))  # y = 0
        assert plane_meet(pl1, pl2) == X_AXIS

    def test_line_plane_meet(self):
        pl = Plane(vec(1, 0, 0), rat(-1))  # x = 1
        assert line_plane_meet(X_AXIS, pl) == ("point", vec(1, 0, 0))
        assert line_plane_meet(Y_AXIS, pl) == ("parallel",)
        pl0 = Plane(vec(0, 0, 1), rat(0))
        assert line_plane_meet(X_AXIS, pl0) == ("in_plane",)

    def test_line_plane_meet_nonzero_moment(self):
        # lines off the origin exercise the moment term of the meet formula
        l = line_through(vec(0, 0, 1), vec(0, 1, 1))
        assert line_plane_meet(l, Plane(vec(0, 1, 0), rat(0))) == (
            "point", vec(0, 0, 1)
        )
        assert line_plane_meet(l, Plane(vec(0, 1, 0), rat(-5))) == (
            "point", vec(0, 5, 1)
        )
        l2 = line_through(vec(3, 2, 1), vec(4, 4, 4))
        hit = line_plane_meet(l2, Plane(vec(1, 1, 1), rat(-18)))
        assert hit[0] == "point"
        p = hit[1]
        assert p[0] + p[1] + p[2] == 18
        from transversals.core import line_contains_point

        assert line_contains_point(l2, p)

    @settings(max_examples=200)
    @given(point, point, point, point)
    def test_line_plane_meet_point_on_line_and_plane(self, p, q, r, s):
        if p == q:
            return
        l = line_through(p, q)
        try:
            pl = plane_through_points(r, s, v_add(r, vec(1, 2, 5)))
        except CoincidentPoints:
            return
        hit = line_plane_meet(l, pl)
        if hit[0] == "point":
            from transversals.core import line_contains_point

            assert line_contains_point(l, hit[1])
            assert point_in_plane(hit[1], pl)

    def test_segment_plane_meet(self):
        pl = Plane(vec(0, 0, 1), rat(0))
        s = Segment3(vec(0, 0, -1), vec(0, 0, 1))
        assert segment_plane_meet(s, pl) == ("point", vec(0, 0, 0))
        s_above = Segment3(vec(0, 0, 1), vec(0, 0, 2))
        assert segment_plane_meet(s_above, pl) == ("empty",)
        s_touch_open = Segment3(vec(0, 0, 0), vec(0, 0, 2), closed_a=False)
        assert segment_plane_meet(s_touch_open, pl) == ("empty",)
        s_in = Segment3(vec(1, 1, 0), vec(2, 5, 0))
        assert segment_plane_meet(s_in, pl) == ("segment", s_in)

    @settings(max_examples=200)
    @given(point, point, point)
    def test_plane_line_incidence(self, p, q, r):
        if p == q:
            return
        l = line_through(p, q)
        try:
            pl = plane_through_point_line(r, l)
        except InvalidLine:
            return  # r on l
        assert point_in_plane(p, pl)
        assert point_in_plane(q, pl)
        assert point_in_plane(r, pl)
