"""Three pairwise skew lines: the doubly ruled quadric and its charts.

Three pairwise skew lines lie on a unique quadric (hyperbolic paraboloid
when their directions are parallel to a common plane, hyperboloid of one
sheet otherwise) and fill out one ruling of it; every transversal of the
three belongs to the other ruling.  The second ruling is parameterized by
where its lines cross the first generator r: an affine parameter for the
paraboloid, a projective one (the circle) for the hyperboloid.  Segments
supported on first-ruling lines pull back to arcs of that chart through an
exact Moebius incidence map, and a fourth supporting line off the ruling
pins the whole problem down to at most two candidate transversals, which
may be quadratic irrationals and are then filtered with surd arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Plane,
    classify_pair,
    line_meets_segment,
    plane_from_line_hpoint,
    plane_meet,
    point_on_line,
    reciprocal_product,
    same_line,
    supporting_line,
    v_add,
    v_cross,
    v_dot,
    v_scale,
    v_sub,
)
from .errors import ExcludedParam, NotPairwiseSkew, SegmentNotInFirstRuling
from .intervals import (
    INF,
    AffineInterval,
    circ_interior_sample,
    circ_point,
    circ_span,
    intersect_affine,
    intersect_circular,
    pkey,
    remove_affine_points,
    remove_circular_points,
)
from .result import (
    GENERIC,
    RULING_H1,
    RULING_HP,
    AlgebraicLineRep,
    Component,
    LineRep,
    make_result,
)
from .scalars import quadratic_roots_exact, rat


# ---------------------------------------------------------------------------
# quadric through three skew lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quadric:
    """Symmetric 4x4 rational matrix up to scale; x^T M x = 0."""

    m: tuple

    def eval_h(self, p):
        total = rat(0)
        for i in range(4):
            row = self.m[i]
            total += p[i] * (row[0] * p[0] + row[1] * p[1] + row[2] * p[2] + row[3] * p[3])
        return total

    def bilin(self, p, q):
        total = rat(0)
        for i in range(4):
            row = self.m[i]
            total += p[i] * (row[0] * q[0] + row[1] * q[1] + row[2] * q[2] + row[3] * q[3])
        return total


def _hpoint(p):
    return (p[0], p[1], p[2], rat(1))


def _hdir(d):
    return (d[0], d[1], d[2], rat(0))


def _nullspace(rows, ncols):
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                f = mat[k][c]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [rat(0)] * ncols
        v[fc] = rat(1)
        for rr, pc in enumerate(pivots):
            v[pc] = -mat[rr][fc]
        basis.append(tuple(v))
    return basis


def _check_pairwise_skew(l1, l2, l3):
    for a, b in ((l1, l2), (l1, l3), (l2, l3)):
        if reciprocal_product(a, b) == 0:
            raise NotPairwiseSkew("generators must be pairwise skew")


def quadric_through(l1, l2, l3):
    """The unique quadric containing three pairwise skew lines."""
    _check_pairwise_skew(l1, l2, l3)
    rows = []
    for l in (l1, l2, l3):
        p = point_on_line(l)
        for pt in (p, v_add(p, l.direction), v_sub(p, l.direction)):
            x, y, z = pt
            w = rat(1)
            rows.append(
                (
                    x * x, 2 * x * y, 2 * x * z, 2 * x * w,
                    y * y, 2 * y * z, 2 * y * w,
                    z * z, 2 * z * w,
                    w * w,
                )
            )
    kernel = _nullspace(rows, 10)
    if len(kernel) != 1:
        raise NotPairwiseSkew("degenerate generator triple")
    c = kernel[0]
    m = (
        (c[0], c[1], c[2], c[3]),
        (c[1], c[4], c[5], c[6]),
        (c[2], c[5], c[7], c[8]),
        (c[3], c[6], c[8], c[9]),
    )
    return Quadric(m)


def quadric_kind(l1, l2, l3):
    """"hp" when the three directions span only a plane, else "h1"."""
    _check_pairwise_skew(l1, l2, l3)
    d1, d2, d3 = l1.direction, l2.direction, l3.direction
    det = v_dot(d1, v_cross(d2, d3))
    return "hp" if det == 0 else "h1"


def line_on_quadric(l, q):
    p = _hpoint(point_on_line(l))
    d = _hdir(l.direction)
    return q.eval_h(p) == 0 and q.eval_h(d) == 0 and q.bilin(p, d) == 0


def line_vs_quadric(l, q):
    """Affine intersection of a line with a quadric.

    ("contained",) | ("empty",) | ("one", point) for the degree-drop case |
    ("tangent", point) | ("secant", p1, p2) with rational points |
    ("secant_irrational", (c2, c1, c0)) when the two crossing parameters
    are conjugate quadratic surds over the line's (base, direction) frame.
    """
    p = _hpoint(point_on_line(l))
    d = _hdir(l.direction)
    c2 = q.eval_h(d)
    c1 = 2 * q.bilin(p, d)
    c0 = q.eval_h(p)
    base = point_on_line(l)

    def at(t):
        return v_add(base, v_scale(t, l.direction))

    roots = quadratic_roots_exact(c2, c1, c0)
    if roots[0] == "all":
        return ("contained",)
    if roots[0] == "none":
        return ("empty",)
    if roots[0] == "one":
        if c2 == 0:
            return ("one", at(roots[1]))
        return ("tangent", at(roots[1]))
    if roots[0] == "two":
        return ("secant", at(roots[1]), at(roots[2]))
    return ("secant_irrational", (c2, c1, c0))


def ruling_line_through(generators, x):
    """The transversal of the three generators passing through point x.

    For x on their quadric this is the second-ruling line through x.  Works
    for rational and quadratic-surd coordinates alike.
    """
    usable = []
    for g in generators:
        if v_cross(x, g.direction) != g.moment:  # x not on g
            usable.append(g)
        if len(usable) == 2:
            break
    g1, g2 = usable[0], usable[1]
    pl1 = plane_from_line_hpoint(g1, _hpoint(x))
    pl2 = plane_from_line_hpoint(g2, _hpoint(x))
    return plane_meet(pl1, pl2)


# ---------------------------------------------------------------------------
# the second-ruling chart over r = l1
# ---------------------------------------------------------------------------

def _dot4(plane4, h):
    return plane4[0] * h[0] + plane4[1] * h[1] + plane4[2] * h[2] + plane4[3] * h[3]


@dataclass(frozen=True)
class RulingChart:
    """Parameterization of the second ruling by its crossing with r = l1.

    The chart point t means the affine point base + t*dirv on r; INF is the
    point at infinity of r (a real parallel ruling line on a hyperboloid of
    one sheet, the ruling at infinity on a paraboloid).  excluded collects
    the parameters whose ruling line is parallel to one of the generators.
    """

    kind: str  # "hp" | "h1"
    generators: tuple
    quadric: Quadric
    base: tuple
    dirv: tuple
    plane2_0: tuple  # plane through (chart point, l2): constant part
    plane2_1: tuple  # and the coefficient of t
    plane3_0: tuple
    plane3_1: tuple
    excluded: tuple

    def param_of_point(self, p):
        """Chart parameter of an affine point on r."""
        return v_dot(v_sub(p, self.base), self.dirv) / v_dot(self.dirv, self.dirv)


def _plane_coeffs(l, a, b):
    """Linear-in-t coefficients of the plane through (a + t b) and l."""
    d, m = l.direction, l.moment
    n0 = v_add(v_cross(d, a), m)
    n1 = v_cross(d, b)
    off0 = -v_dot(m, a)
    off1 = -v_dot(m, b)
    return n0 + (off0,), n1 + (off1,)


def chart_for(l1, l2, l3):
    _check_pairwise_skew(l1, l2, l3)
    q = quadric_through(l1, l2, l3)
    kind = quadric_kind(l1, l2, l3)
    base = point_on_line(l1)
    dirv = l1.direction
    p2_0, p2_1 = _plane_coeffs(l2, base, dirv)
    p3_0, p3_1 = _plane_coeffs(l3, base, dirv)

    excluded = [INF]  # the ruling line through r's infinity is parallel to r
    # parallel to l2 happens where l2 crosses plane3(t) at infinity; same
    # for l3 with plane2(t)
    for (pl0, pl1, other) in ((p3_0, p3_1, l2), (p2_0, p2_1, l3)):
        dh = _hdir(other.direction)
        a0 = _dot4(pl0, dh)
        a1 = _dot4(pl1, dh)
        if a1 != 0:
            t = -a0 / a1
            if t not in [e for e in excluded if e is not INF]:
                excluded.append(t)
    return RulingChart(kind, (l1, l2, l3), q, base, dirv, p2_0, p2_1, p3_0, p3_1,
                       tuple(excluded))


def _plane_at(p0, p1, t):
    if t is INF:
        return p1
    return tuple(p0[i] + t * p1[i] for i in range(4))


def _ruling_line_at(chart, t):
    """The second-ruling line at chart parameter t, no exclusion check.

    At t = INF this is the affine ruling line parallel to r on a
    hyperboloid of one sheet; on a paraboloid the construction degenerates
    there (the second ruling's member at infinity is not an affine line).
    """
    pl2 = _plane_at(chart.plane2_0, chart.plane2_1, t)
    pl3 = _plane_at(chart.plane3_0, chart.plane3_1, t)
    return plane_meet(Plane(pl2[:3], pl2[3]), Plane(pl3[:3], pl3[3]))


def transversal_at(chart, t):
    """The transversal of the three generators at chart parameter t.

    Raises ExcludedParam where the ruling line is parallel to a generator
    (hence not a transversal of it) or degenerates entirely.
    """
    for e in chart.excluded:
        if (t is INF and e is INF) or (t is not INF and e is not INF and t == e):
            raise ExcludedParam(f"parameter {t} is excluded")
    return _ruling_line_at(chart, t)


def _first_ruling_member(chart, l):
    if same_line(l, chart.generators[0]):
        return True
    return line_on_quadric(l, chart.quadric) and reciprocal_product(
        l, chart.generators[0]
    ) != 0


def segment_to_arc(chart, s):
    """Chart parameters whose ruling transversal meets the segment.

    The incidence between the chart parameter and the crossing parameter on
    the segment's supporting line is an exact Moebius map, so the preimage
    of the segment is a single arc (projectively), with openness inherited
    from the segment's endpoint flags.
    """
    l1, l2, l3 = chart.generators
    gl = supporting_line(s)

    if s.is_point:
        p = s.a
        if chart.quadric.eval_h(_hpoint(p)) != 0 or not _first_ruling_member(chart, gl):
            raise SegmentNotInFirstRuling("point off the first ruling")
        t_line = ruling_line_through(chart.generators, p)
        kind = classify_pair(t_line, l1)
        if kind[0] == "intersecting":
            return circ_point("circle", chart.param_of_point(kind[1]))
        return circ_point("circle", INF)

    if not _first_ruling_member(chart, gl):
        raise SegmentNotInFirstRuling("supporting line off the first ruling")

    if same_line(gl, l1):
        ta = chart.param_of_point(s.a)
        tb = chart.param_of_point(s.b)
        if ta < tb:
            return circ_span("circle", ta, tb, s.closed_a, s.closed_b)
        return circ_span("circle", tb, ta, s.closed_b, s.closed_a)

    if same_line(gl, l2):
        pl0, pl1 = chart.plane3_0, chart.plane3_1
    else:
        pl0, pl1 = chart.plane2_0, chart.plane2_1
    ah = _hpoint(s.a)
    bh = _hdir(v_sub(s.b, s.a))
    n0, n1 = -_dot4(pl0, ah), -_dot4(pl1, ah)
    d0, d1 = _dot4(pl0, bh), _dot4(pl1, bh)

    def t_at(u):
        coef = n1 - u * d1
        if coef == 0:
            return INF
        return (u * d0 - n0) / coef

    def u_at(t):
        if t is INF:
            if d1 == 0:
                return None  # u at infinity
            return n1 / d1
        num = n0 + n1 * t
        den = d0 + d1 * t
        if den == 0:
            return None
        return num / den

    t0 = t_at(rat(0))
    t1 = t_at(rat(1))
    cand = circ_span("circle", t0, t1, s.closed_a, s.closed_b)
    smp = circ_interior_sample(cand)
    uval = u_at(smp)
    if uval is not None and 0 < uval < 1:
        return cand
    return circ_span("circle", t1, t0, s.closed_b, s.closed_a)


# ---------------------------------------------------------------------------
# the three-skew case of the solver
# ---------------------------------------------------------------------------

def _arc_to_affine(arc):
    if arc.kind == "point":
        if arc.start is INF:
            return None
        return AffineInterval(arc.start, arc.start, True, True)
    s, e = arc.start, arc.end
    if s is INF or e is INF or pkey(s) > pkey(e):
        raise AssertionError("paraboloid arc cannot wrap the chart")
    return AffineInterval(s, e, arc.closed_start, arc.closed_end)


def case_three_skew(segments, lines, triple):
    """Transversal set when a pairwise-skew supporting triple exists."""
    i, j, k = triple
    l1, l2, l3 = lines[i], lines[j], lines[k]
    chart = chart_for(l1, l2, l3)

    witness = None
    for idx, gl in enumerate(lines):
        if not _first_ruling_member(chart, gl):
            witness = idx
            break

    if witness is None:
        arcs = [segment_to_arc(chart, s) for s in segments]
        finite_excluded = [e for e in chart.excluded if e is not INF]
        if chart.kind == "hp":
            ivs = [_arc_to_affine(a) for a in arcs]
            if any(iv is None for iv in ivs):
                comps2 = []
            else:
                comps2 = remove_affine_points(intersect_affine(ivs), finite_excluded)
            label = RULING_HP
            chart_name = "affine"
        else:
            comps2 = intersect_circular(arcs)
            comps2 = remove_circular_points(comps2, chart.excluded)
            label = RULING_H1
            chart_name = "circle"
        out = []
        for arc in comps2:
            if chart_name == "affine":
                from .intervals import affine_interior_sample

                smp = affine_interior_sample(arc)
                isolated = arc.is_point
            else:
                smp = circ_interior_sample(arc)
                isolated = arc.kind == "point"
            rep = LineRep(transversal_at(chart, smp))
            out.append(Component(chart_name, (arc,), rep, isolated))
        return make_result(label, out)

    wline = lines[witness]
    candidates = []
    if line_on_quadric(wline, chart.quadric):
        candidates.append(LineRep(wline))  # second-ruling witness: itself
    else:
        hit = line_vs_quadric(wline, chart.quadric)
        if hit[0] in ("one", "tangent"):
            candidates.append(LineRep(ruling_line_through(chart.generators, hit[1])))
        elif hit[0] == "secant":
            for x in (hit[1], hit[2]):
                candidates.append(LineRep(ruling_line_through(chart.generators, x)))
        elif hit[0] == "secant_irrational":
            c2, c1, c0 = hit[1]
            roots = quadratic_roots_exact(c2, c1, c0)
            base = point_on_line(wline)
            for ridx, t in ((0, roots[1]), (1, roots[2])):
                x = v_add(base, v_scale(t, wline.direction))
                tl = ruling_line_through(chart.generators, x)
                candidates.append(
                    AlgebraicLineRep((c2, c1, c0), ridx, wline, tl)
                )

    comps = []
    for cand in candidates:
        if all(line_meets_segment(cand.line, s) for s in segments):
            comps.append(Component(None, (), cand, True))
    return make_result(GENERIC, comps)
