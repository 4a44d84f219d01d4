"""Exact 3D kernel: points, Pluecker lines, planes, segments, predicates.

Points and vectors are plain 3-tuples of exact scalars.  A line is stored
as (direction, moment) with moment = p x direction for any point p on the
line; two lines are equal when their joint 6-vectors agree up to a nonzero
scale.  All predicates are decided by exact sign computations, and they
work unchanged over quadratic-surd coordinates (see scalars.SqrtExt).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CoincidentPoints, InvalidLine, InvalidSegment
from .scalars import ZERO, rat, sign


# ---------------------------------------------------------------------------
# tuple vector helpers
# ---------------------------------------------------------------------------

def vec(x, y, z):
    return (rat(x), rat(y), rat(z))


def v_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def v_sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def v_neg(a):
    return (-a[0], -a[1], -a[2])


def v_scale(k, a):
    return (k * a[0], k * a[1], k * a[2])


def v_dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def v_cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def v_is_zero(a):
    return not (a[0] or a[1] or a[2])


def v_parallel(a, b):
    return v_is_zero(v_cross(a, b))


# ---------------------------------------------------------------------------
# lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Line3:
    """Oriented Pluecker line (direction, moment); equality is scale-free."""

    direction: tuple
    moment: tuple

    def __post_init__(self):
        if v_is_zero(self.direction):
            raise InvalidLine("line needs a nonzero direction")
        if v_dot(self.direction, self.moment) != 0:
            raise InvalidLine("Pluecker constraint direction.moment = 0 violated")

    def sixtuple(self):
        return self.direction + self.moment

    def canonical(self):
        """Joint 6-vector scaled so its first nonzero coordinate is 1."""
        six = self.sixtuple()
        for c in six:
            if c != 0:
                return tuple(x / c for x in six)
        raise InvalidLine("zero line")  # pragma: no cover

    def __eq__(self, other):
        if not isinstance(other, Line3):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"Line3(d={self.direction}, m={self.moment})"


def line_through(p, q):
    """The line through two distinct points, direction q - p."""
    if p == q:
        raise CoincidentPoints(f"line through coincident points {p}")
    d = v_sub(q, p)
    return Line3(d, v_cross(p, d))


def line_point_dir(p, d):
    """The line through p with direction d."""
    if v_is_zero(d):
        raise InvalidLine("zero direction")
    return Line3(d, v_cross(p, d))


def point_on_line(l):
    """The point of l closest to the origin (always rational in l's field)."""
    d = l.direction
    return v_scale(1 / v_dot(d, d), v_cross(d, l.moment))


def line_contains_point(l, p):
    return v_cross(p, l.direction) == l.moment


def reciprocal_product(l1, l2):
    """Side operator d1.m2 + d2.m1; zero iff the lines are coplanar."""
    return v_dot(l1.direction, l2.moment) + v_dot(l2.direction, l1.moment)


def same_line(l1, l2):
    return v_parallel(l1.direction, l2.direction) and line_contains_point(
        l1, point_on_line(l2)
    )


def classify_pair(l1, l2):
    """("skew",) | ("parallel",) | ("identical",) | ("intersecting", point)."""
    if reciprocal_product(l1, l2) != 0:
        return ("skew",)
    if v_parallel(l1.direction, l2.direction):
        if line_contains_point(l1, point_on_line(l2)):
            return ("identical",)
        return ("parallel",)
    return ("intersecting", line_line_point(l1, l2))


def line_line_point(l1, l2):
    """Intersection point of two coplanar non-parallel lines."""
    # X = p1 + t*d1 with X x d2 = m2; the cross of d1 with d2 is nonzero.
    p1 = point_on_line(l1)
    cdd = v_cross(l1.direction, l2.direction)
    rhs = v_sub(l2.moment, v_cross(p1, l2.direction))
    for i in range(3):
        if cdd[i] != 0:
            t = rhs[i] / cdd[i]
            return v_add(p1, v_scale(t, l1.direction))
    raise InvalidLine("parallel lines have no intersection point")


def lines_meet(l1, l2):
    """True iff the two lines share an affine point (identical lines count)."""
    if reciprocal_product(l1, l2) != 0:
        return False
    if v_parallel(l1.direction, l2.direction):
        return line_contains_point(l1, point_on_line(l2))
    return True


# ---------------------------------------------------------------------------
# planes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Plane:
    """Plane n.x + offset = 0 with nonzero normal; equality is scale-free."""

    normal: tuple
    offset: object

    def __post_init__(self):
        if v_is_zero(self.normal):
            raise InvalidLine("plane needs a nonzero normal")

    def eval_point(self, p):
        return v_dot(self.normal, p) + self.offset

    def canonical(self):
        four = self.normal + (self.offset,)
        for c in four:
            if c != 0:
                return tuple(x / c for x in four)
        raise InvalidLine("zero plane")  # pragma: no cover

    def __eq__(self, other):
        if not isinstance(other, Plane):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())


def point_in_plane(p, plane):
    return plane.eval_point(p) == 0


def plane_through_points(p, q, r):
    n = v_cross(v_sub(q, p), v_sub(r, p))
    if v_is_zero(n):
        raise CoincidentPoints("collinear points span no plane")
    return Plane(n, -v_dot(n, p))


def plane_from_line_hpoint(l, hpoint):
    """Plane through line l and homogeneous point (x, y, z, w).

    With w = 0 the point is a direction: the plane through l parallel to it.
    Returns None when the point lies on l (projectively), where no unique
    plane exists.
    """
    p, w = hpoint[:3], hpoint[3]
    n = v_add(v_cross(l.direction, p), v_scale(w, l.moment))
    if v_is_zero(n):
        return None
    return Plane(n, -v_dot(l.moment, p))


def plane_through_point_line(p, l):
    pl = plane_from_line_hpoint(l, (p[0], p[1], p[2], rat(1)))
    if pl is None:
        raise InvalidLine("point lies on the line; plane not unique")
    return pl


def plane_meet(pl1, pl2):
    """Intersection line of two non-parallel planes."""
    d = v_cross(pl1.normal, pl2.normal)
    if v_is_zero(d):
        raise InvalidLine("parallel planes share no line")
    m = v_sub(v_scale(pl1.offset, pl2.normal), v_scale(pl2.offset, pl1.normal))
    return Line3(d, m)


def line_plane_meet(l, plane):
    """("point", p) | ("in_plane",) | ("parallel",).

    The meet point is (n x m - offset*d) / (n.d): for X on l we have
    X x d = m, and crossing that relation with n recovers X up to the
    n.d factor.
    """
    w = v_dot(l.direction, plane.normal)
    num = v_sub(v_cross(plane.normal, l.moment), v_scale(plane.offset, l.direction))
    if w == 0:
        if v_is_zero(num):
            return ("in_plane",)
        return ("parallel",)
    return ("point", v_scale(1 / w, num))


# ---------------------------------------------------------------------------
# segments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Segment3:
    """Closed/open/half-open segment; may degenerate to a (closed) point."""

    a: tuple
    b: tuple
    closed_a: bool = True
    closed_b: bool = True

    def __post_init__(self):
        if self.a == self.b and not (self.closed_a and self.closed_b):
            raise InvalidSegment("a point segment must be closed")

    @property
    def is_point(self):
        return self.a == self.b

    def midpoint(self):
        half = rat(1, 2)
        return tuple((x + y) * half for x, y in zip(self.a, self.b))

    def interior_point(self, t=rat(1, 2)):
        """A point of the segment's point set: a + t*(b - a), 0 < t < 1."""
        return v_add(self.a, v_scale(t, v_sub(self.b, self.a)))


VERTICAL = (rat(0), rat(0), rat(1))


def supporting_line(s):
    """Line containing the segment; the vertical line for a point segment."""
    if s.is_point:
        return line_point_dir(s.a, VERTICAL)
    return line_through(s.a, s.b)


def _param_in_range(t, s):
    if t < 0 or (t == 0 and not s.closed_a):
        return False
    if t > 1 or (t == 1 and not s.closed_b):
        return False
    return True


def segment_contains_point(s, p):
    if s.is_point:
        return p == s.a
    d = v_sub(s.b, s.a)
    r = v_sub(p, s.a)
    if not v_is_zero(v_cross(r, d)):
        return False
    t = v_dot(r, d) / v_dot(d, d)
    return _param_in_range(t, s)


def line_meets_segment(l, s):
    """True iff the line and the segment's point set intersect.

    A line containing the whole segment meets it.  Exact for rational and
    quadratic-surd line coordinates alike.
    """
    if s.is_point:
        return line_contains_point(l, s.a)
    e = v_sub(s.b, s.a)
    m2 = v_cross(s.a, e)
    # coplanarity of l with the segment's supporting line
    if v_dot(l.direction, m2) + v_dot(e, l.moment) != 0:
        return False
    cde = v_cross(l.direction, e)
    if v_is_zero(cde):
        # parallel: meets iff l is the supporting line itself
        return line_contains_point(l, s.a)
    # unique crossing point X = a + t*e with X x d = m
    rhs = v_sub(l.moment, v_cross(s.a, l.direction))
    # X x d = (a + t e) x d = a x d + t (e x d);  e x d = -cde
    for i in range(3):
        if cde[i] != 0:
            t = -rhs[i] / cde[i]
            return _param_in_range(t, s)
    raise AssertionError("unreachable")  # pragma: no cover


def segment_plane_meet(s, plane):
    """Intersection of a segment's point set with a plane.

    Returns ("empty",), ("point", p) with openness already resolved, or
    ("segment", s) when the segment lies in the plane.
    """
    fa = plane.eval_point(s.a)
    if s.is_point:
        return ("point", s.a) if fa == 0 else ("empty",)
    fb = plane.eval_point(s.b)
    if fa == 0 and fb == 0:
        return ("segment", s)
    if fa == 0:
        return ("point", s.a) if s.closed_a else ("empty",)
    if fb == 0:
        return ("point", s.b) if s.closed_b else ("empty",)
    if sign(fa) == sign(fb):
        return ("empty",)
    t = fa / (fa - fb)
    return ("point", s.interior_point(t))


def segment_in_plane(s, plane):
    return plane.eval_point(s.a) == 0 and plane.eval_point(s.b) == 0
