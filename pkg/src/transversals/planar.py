"""Transversals to coplanar segments via point-line duality.

A non-vertical line y = a*x + b is the dual point (a, b).  The stabbers of
a segment form a double wedge there: b must lie between the dual lines of
the two endpoints, with boundary membership governed by the endpoint
closedness (the apex, the dual of the supporting line, always belongs).
Intersecting the n wedges amounts to comparing two piecewise-linear
envelopes, the upper envelope L of the per-segment lower boundaries and
the lower envelope U of the upper ones, both built by divide-and-conquer
merge in O(n log n).  Vertical stabbers are invisible in this chart and
are handled by a direct interval intersection of x-extents; they join the
slope-unbounded components "at infinity", which keeps the component count
at n instead of n + 1.

Everything here is 2D and exact; mapping back to 3D lines happens in the
coplanar case driver at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    line_point_dir,
    line_through,
    v_add,
    v_cross,
    v_dot,
    v_is_zero,
    v_scale,
    v_sub,
)
from .errors import InvalidSegment
from .intervals import (
    INF,
    AffineInterval,
    affine_point,
    circ_contains,
    circ_full,
    circ_point,
    circ_span,
    intersect_affine,
    intersect_circular,
)
from .result import (
    CONCURRENT,
    COPLANAR,
    Component,
    LineRep,
    make_result,
)
from .scalars import rat, sign


# ---------------------------------------------------------------------------
# 2D primitives
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Segment2:
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


def cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def sub2(u, v):
    return (u[0] - v[0], u[1] - v[1])


def seg2_contains(seg, p):
    if seg.is_point:
        return p == seg.a
    d = sub2(seg.b, seg.a)
    r = sub2(p, seg.a)
    if cross2(r, d) != 0:
        return False
    t = (r[0] * d[0] + r[1] * d[1]) / (d[0] * d[0] + d[1] * d[1])
    if t < 0 or (t == 0 and not seg.closed_a):
        return False
    if t > 1 or (t == 1 and not seg.closed_b):
        return False
    return True


def meets_nonvertical(a, b, seg):
    """Does the line y = a*x + b meet the segment's point set?"""
    if seg.is_point:
        return seg.a[1] - a * seg.a[0] - b == 0
    s1 = sign(seg.a[1] - a * seg.a[0] - b)
    s2 = sign(seg.b[1] - a * seg.b[0] - b)
    if s1 == 0 and s2 == 0:
        return True  # the supporting line meets the whole segment
    if s1 == 0:
        return seg.closed_a
    if s2 == 0:
        return seg.closed_b
    return s1 != s2


def meets_vertical(c, seg):
    """Does the vertical line x = c meet the segment's point set?"""
    if seg.is_point:
        return seg.a[0] == c
    if seg.a[0] == seg.b[0]:
        return seg.a[0] == c
    s1 = sign(seg.a[0] - c)
    s2 = sign(seg.b[0] - c)
    if s1 == 0:
        return seg.closed_a
    if s2 == 0:
        return seg.closed_b
    return s1 != s2


def stabs_all(a, b, segments):
    return all(meets_nonvertical(a, b, s) for s in segments)


def x_extent(seg):
    """The abscissa interval swept by vertical stabbers of the segment."""
    x1, x2 = seg.a[0], seg.b[0]
    if x1 == x2:
        return affine_point(x1)
    if x1 < x2:
        return AffineInterval(x1, x2, seg.closed_a, seg.closed_b)
    return AffineInterval(x2, x1, seg.closed_b, seg.closed_a)


# ---------------------------------------------------------------------------
# piecewise-linear envelopes
# ---------------------------------------------------------------------------
# An envelope is a list of (start, (m, c)) pieces: the function equals
# m*a + c on [start, next_start), the first start being None (= -infinity).

def _line_eval(line, a):
    return line[0] * a + line[1]


def eval_envelope(env, a):
    lo, hi = 0, len(env)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if env[mid][0] is None or env[mid][0] <= a:
            lo = mid
        else:
            hi = mid
    return _line_eval(env[lo][1], a)


def _min_pair_pieces(l1, l2):
    """min of two lines as envelope pieces (2 pieces when they cross)."""
    if l1 == l2:
        return [(None, l1)]
    m1, c1 = l1
    m2, c2 = l2
    if m1 == m2:
        return [(None, l1 if c1 < c2 else l2)]
    ax = (c2 - c1) / (m1 - m2)
    # before the crossing the steeper line is smaller
    first, second = (l1, l2) if m1 > m2 else (l2, l1)
    return [(None, first), (ax, second)]


def _neg_line(line):
    return (-line[0], -line[1])


def _sample_in(lo, hi):
    if lo is None and hi is None:
        return rat(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def merge_max(f, g):
    """Pointwise maximum of two piecewise-linear functions."""
    out = []

    def emit(start, line):
        if out and out[-1][1] == line:
            return
        if out and out[-1][0] == start:
            out[-1] = (start, line)
            return
        out.append((start, line))

    i = j = 0
    cur = None
    while i < len(f) and j < len(g):
        fl, gl = f[i][1], g[j][1]
        fe = f[i + 1][0] if i + 1 < len(f) else None
        ge = g[j + 1][0] if j + 1 < len(g) else None
        if fe is None:
            nxt = ge
        elif ge is None:
            nxt = fe
        else:
            nxt = fe if fe <= ge else ge
        if fl == gl:
            emit(cur, fl)
        else:
            dm, dc = fl[0] - gl[0], fl[1] - gl[1]
            if dm == 0:
                emit(cur, fl if dc > 0 else gl)
            else:
                ax = -dc / dm
                inside = (cur is None or ax > cur) and (nxt is None or ax < nxt)
                if inside:
                    before = fl if dm < 0 else gl
                    after = gl if dm < 0 else fl
                    emit(cur, before)
                    emit(ax, after)
                else:
                    s = _sample_in(cur, nxt)
                    emit(cur, fl if _line_eval(fl, s) > _line_eval(gl, s) else gl)
        if nxt is None:
            break
        if fe is not None and fe == nxt:
            i += 1
        if ge is not None and ge == nxt:
            j += 1
        cur = nxt
    return out


def upper_envelope(pieces_list):
    """Divide-and-conquer maximum of many piecewise-linear functions."""
    queue = list(pieces_list)
    if not queue:
        raise ValueError("empty envelope input")
    while len(queue) > 1:
        nxt = []
        for k in range(0, len(queue) - 1, 2):
            nxt.append(merge_max(queue[k], queue[k + 1]))
        if len(queue) % 2:
            nxt.append(queue[-1])
        queue = nxt
    return queue[0]


# ---------------------------------------------------------------------------
# feasible slope analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarComponent:
    """One connected set of stabbers of a coplanar scene (2D view).

    kind "slopes": a maximal interval of slopes (arc = AffineInterval).
    kind "circle": slope arc through infinity, vertical stabbers included
    (arc = CircArc on the projective slope line).
    representative: ("line", a, b) or ("vertical", c).
    """

    kind: str
    arc: object
    representative: tuple
    isolated: bool
    contains_vertical: bool = False


@dataclass
class PlanarResult:
    components: list
    dual_lowers: list  # per segment (m, c) lower boundary pair
    dual_uppers: list
    env_lo: list
    env_hi: list
    vertical: object  # AffineInterval or None


def _dual_pairs(segments):
    lowers, uppers = [], []
    for s in segments:
        g1 = (-s.a[0], s.a[1])
        g2 = (-s.b[0], s.b[1])
        lowers.append(_min_pair_pieces(g1, g2))
        uppers.append([(st, _neg_line(l)) for st, l in _min_pair_pieces(_neg_line(g1), _neg_line(g2))])
    return lowers, uppers


def _negate_envelope(env):
    return [(st, _neg_line(l)) for st, l in env]


def _refine_pinched(u, v, fiber, segments):
    """Split a slope interval where L == U along the dual line `fiber`.

    The single feasible stabber at slope a is the line (a, fiber(a)); its
    membership can only change where the moving dual point crosses another
    endpoint dual line.  Returns [(kind, lo, hi_or_param, allowed)] atoms.
    """
    fm, fc = fiber
    cuts = set()
    for s in segments:
        for (gm, gc) in ((-s.a[0], s.a[1]), (-s.b[0], s.b[1])):
            if gm == fm:
                continue
            a0 = (gc - fc) / (fm - gm)
            if (u is None or a0 > u) and (v is None or a0 < v):
                cuts.add(a0)
    cuts = sorted(cuts)
    atoms = []
    edges = [u] + cuts + [v]
    for k in range(len(edges) - 1):
        lo, hi = edges[k], edges[k + 1]
        smp = _sample_in(lo, hi)
        ok = stabs_all(smp, _line_eval(fiber, smp), segments)
        atoms.append(("open", lo, hi, ok))
        if k < len(edges) - 2:
            c = edges[k + 1]
            atoms.append(("point", c, c, stabs_all(c, _line_eval(fiber, c), segments)))
    return atoms


def _feasibility_atoms(env_lo, env_hi, segments):
    """Ordered atoms over the slope axis with their feasibility.

    Atom = ("open", lo, hi, feasible) or ("point", a, a, feasible); the
    open atoms have constant sign of U - L, equality stretches refined via
    the pinched-fiber walk.
    """
    starts = sorted(
        {st for st, _ in env_lo if st is not None}
        | {st for st, _ in env_hi if st is not None}
    )
    edges = [None] + starts + [None]
    il = ih = 0
    atoms = []

    def d_line(i_lo, i_hi):
        l, h = env_lo[i_lo][1], env_hi[i_hi][1]
        return (h[0] - l[0], h[1] - l[1])

    ncells = len(edges) - 1
    for k in range(ncells):
        lo, hi = edges[k], edges[k + 1]
        # advance piece indices so that the cell lies in both pieces
        while il + 1 < len(env_lo) and env_lo[il + 1][0] is not None and (
            lo is not None and env_lo[il + 1][0] <= lo
        ):
            il += 1
        while ih + 1 < len(env_hi) and env_hi[ih + 1][0] is not None and (
            lo is not None and env_hi[ih + 1][0] <= lo
        ):
            ih += 1
        dm, dc = d_line(il, ih)
        if dm == 0:
            if dc > 0:
                atoms.append(("open", lo, hi, True))
            elif dc < 0:
                atoms.append(("open", lo, hi, False))
            else:
                atoms.extend(_refine_pinched(lo, hi, env_lo[il][1], segments))
        else:
            root = -dc / dm
            inside = (lo is None or root > lo) and (hi is None or root < hi)
            if not inside:
                smp = _sample_in(lo, hi)
                atoms.append(("open", lo, hi, dm * smp + dc > 0))
            else:
                atoms.append(("open", lo, root, dm * _sample_in(lo, root) + dc > 0))
                val = eval_envelope(env_lo, root)
                atoms.append(("point", root, root, stabs_all(root, val, segments)))
                atoms.append(("open", root, hi, dm * _sample_in(root, hi) + dc > 0))
        if k < ncells - 1:
            c = edges[k + 1]
            dval = eval_envelope(env_hi, c) - eval_envelope(env_lo, c)
            if dval > 0:
                feas = True
            elif dval < 0:
                feas = False
            else:
                feas = stabs_all(c, eval_envelope(env_lo, c), segments)
            atoms.append(("point", c, c, feas))
    return atoms


def _runs_from_atoms(atoms):
    """Group consecutive feasible atoms into maximal slope intervals.

    Returns a list of (AffineInterval, sample_slope_atoms) where the sample
    list holds one ("open"/"point", lo, hi) witness atom per run for
    representative selection.
    """
    runs = []
    cur = None  # [lo, closed_lo, hi, closed_hi, witness]
    for kind, lo, hi, feas in atoms:
        if not feas:
            if cur is not None:
                runs.append(cur)
                cur = None
            continue
        if kind == "open":
            if cur is None:
                cur = [lo, False, hi, False, ("open", lo, hi)]
            else:
                cur[2], cur[3] = hi, False
                if cur[4][0] != "open":
                    cur[4] = ("open", lo, hi)
        else:
            if cur is None:
                cur = [lo, True, lo, True, ("point", lo, lo)]
            else:
                cur[2], cur[3] = lo, True
    if cur is not None:
        runs.append(cur)
    out = []
    for lo, clo, hi, chi, witness in runs:
        out.append((AffineInterval(lo, hi, clo, chi), witness))
    return out


def planar_components(segments):
    """Connected components of stabbers of coplanar segments (2D).

    Exact piecewise-linear envelopes decide slope feasibility; equality
    slopes are resolved by point membership tests honoring endpoint
    openness; vertical stabbers are merged in per the connected-at-infinity
    rule.
    """
    if not segments:
        raise ValueError("planar_components needs at least one segment")
    lowers, uppers = _dual_pairs(segments)
    env_lo = upper_envelope(lowers)
    env_hi = _negate_envelope(upper_envelope([_negate_envelope(p) for p in uppers]))
    atoms = _feasibility_atoms(env_lo, env_hi, segments)
    runs = _runs_from_atoms(atoms)

    vert = intersect_affine([x_extent(s) for s in segments])
    vertical = vert[0] if vert else None

    def rep_for(witness):
        kind, lo, hi = witness
        if kind == "point":
            return ("line", lo, eval_envelope(env_lo, lo))
        smp = _sample_in(lo, hi)
        b_lo = eval_envelope(env_lo, smp)
        b_hi = eval_envelope(env_hi, smp)
        return ("line", smp, (b_lo + b_hi) / 2)

    comps = []
    for interval, witness in runs:
        isolated = interval.is_point and eval_envelope(
            env_lo, interval.lo
        ) == eval_envelope(env_hi, interval.lo)
        comps.append(
            PlanarComponent("slopes", interval, rep_for(witness), isolated)
        )

    if vertical is not None:
        if vertical.is_point:
            vrep = ("vertical", vertical.lo)
        else:
            vrep = ("vertical", _sample_in(vertical.lo, vertical.hi))
        lo_tail = comps and comps[0].arc.lo is None
        hi_tail = comps and comps[-1].arc.hi is None
        if lo_tail and hi_tail and len(comps) == 1:
            only = comps[0]
            comps = [PlanarComponent(
                "circle", circ_full("circle"), only.representative, False, True
            )]
        elif lo_tail and hi_tail:
            first, last = comps[0], comps[-1]
            arc = circ_span(
                "circle", last.arc.lo, first.arc.hi,
                last.arc.closed_lo, first.arc.closed_hi,
            )
            merged = PlanarComponent("circle", arc, vrep, False, True)
            comps = comps[1:-1] + [merged]
        elif hi_tail:
            last = comps[-1]
            arc = circ_span("circle", last.arc.lo, INF, last.arc.closed_lo, True)
            comps = comps[:-1] + [
                PlanarComponent("circle", arc, vrep, False, True)
            ]
        elif lo_tail:
            first = comps[0]
            arc = circ_span("circle", INF, first.arc.hi, True, first.arc.closed_hi)
            comps = [PlanarComponent("circle", arc, vrep, False, True)] + comps[1:]
        else:
            comps.append(
                PlanarComponent(
                    "circle", circ_point("circle", INF), vrep,
                    vertical.is_point, True,
                )
            )

    return PlanarResult(comps, lowers, uppers, env_lo, env_hi, vertical)


# ---------------------------------------------------------------------------
# pencils and concurrency
# ---------------------------------------------------------------------------

def direction_param(v):
    """Slope of a 2D direction as a pencil-chart parameter (INF = vertical)."""
    if v[0] == 0:
        return INF
    return v[1] / v[0]


def pencil_arc(q, seg):
    """Directions (mod a half turn) of lines through q meeting the segment."""
    if seg2_contains(seg, q):
        return circ_full("pencil")
    if seg.is_point:
        return circ_point("pencil", direction_param(sub2(seg.a, q)))
    d = sub2(seg.b, seg.a)
    if cross2(sub2(seg.a, q), d) == 0:
        # q on the supporting line but off the segment: one fixed direction
        return circ_point("pencil", direction_param(d))
    pa = direction_param(sub2(seg.a, q))
    pb = direction_param(sub2(seg.b, q))
    midpoint = ((seg.a[0] + seg.b[0]) / 2, (seg.a[1] + seg.b[1]) / 2)
    mid = direction_param(sub2(midpoint, q))
    cand = circ_span("pencil", pa, pb, seg.closed_a, seg.closed_b)
    if circ_contains(cand, mid):
        return cand
    return circ_span("pencil", pb, pa, seg.closed_b, seg.closed_a)


def pencil_through_point(q, segments):
    """Components of directions of lines through q stabbing every segment."""
    return intersect_circular([pencil_arc(q, s) for s in segments])


def concurrent_point(segments):
    """A point common to all segments' point sets, or None."""
    if not segments:
        return None
    state = ("seg", segments[0])
    for s in segments[1:]:
        state = _intersect_state(state, s)
        if state[0] == "empty":
            return None
    if state[0] == "point":
        return state[1]
    seg = state[1]
    if seg.is_point:
        return seg.a
    return ((seg.a[0] + seg.b[0]) / 2, (seg.a[1] + seg.b[1]) / 2)


def _seg_param_interval(seg, origin, d):
    den = d[0] * d[0] + d[1] * d[1]
    ta = ((seg.a[0] - origin[0]) * d[0] + (seg.a[1] - origin[1]) * d[1]) / den
    tb = ((seg.b[0] - origin[0]) * d[0] + (seg.b[1] - origin[1]) * d[1]) / den
    if ta < tb:
        return AffineInterval(ta, tb, seg.closed_a, seg.closed_b)
    if ta > tb:
        return AffineInterval(tb, ta, seg.closed_b, seg.closed_a)
    return affine_point(ta)


def _intersect_state(state, seg):
    kind, cur = state
    if kind == "point":
        return state if seg2_contains(seg, cur) else ("empty", None)
    csg = cur
    if csg.is_point:
        p = csg.a
        return ("point", p) if seg2_contains(seg, p) else ("empty", None)
    origin, d = csg.a, sub2(csg.b, csg.a)
    if seg.is_point:
        return ("point", seg.a) if seg2_contains(csg, seg.a) else ("empty", None)
    e = sub2(seg.b, seg.a)
    if cross2(d, e) == 0:
        if cross2(sub2(seg.a, origin), d) != 0:
            return ("empty", None)  # parallel, different lines
        i1 = _seg_param_interval(csg, origin, d)
        i2 = _seg_param_interval(seg, origin, d)
        both = intersect_affine([i1, i2])
        if not both:
            return ("empty", None)
        iv = both[0]
        pa = (origin[0] + iv.lo * d[0], origin[1] + iv.lo * d[1])
        if iv.is_point:
            return ("point", pa)
        pb = (origin[0] + iv.hi * d[0], origin[1] + iv.hi * d[1])
        return ("seg", Segment2(pa, pb, iv.closed_lo, iv.closed_hi))
    # crossing supporting lines: at most one candidate point
    r = sub2(seg.a, origin)
    t = cross2(r, e) / cross2(d, e)
    p = (origin[0] + t * d[0], origin[1] + t * d[1])
    if seg2_contains(csg, p) and seg2_contains(seg, p):
        return ("point", p)
    return ("empty", None)


# ---------------------------------------------------------------------------
# plane frames and the coplanar case driver
# ---------------------------------------------------------------------------

class Frame2:
    """Rational affine chart on a plane H mapping H <-> R^2 both ways."""

    def __init__(self, plane):
        n = plane.normal
        best, bv = None, None
        for unit in ((rat(1), rat(0), rat(0)),
                     (rat(0), rat(1), rat(0)),
                     (rat(0), rat(0), rat(1))):
            c = v_cross(n, unit)
            if not v_is_zero(c):
                w = v_dot(c, c)
                if best is None or w > best:
                    best, bv = w, c
        self.e1 = bv
        self.e2 = v_cross(n, self.e1)
        self.plane = plane
        for i in range(3):
            if n[i] != 0:
                o = [rat(0), rat(0), rat(0)]
                o[i] = -plane.offset / n[i]
                self.origin = tuple(o)
                break
        self._n1 = v_dot(self.e1, self.e1)
        self._n2 = v_dot(self.e2, self.e2)

    def to2d(self, p):
        r = v_sub(p, self.origin)
        return (v_dot(r, self.e1) / self._n1, v_dot(r, self.e2) / self._n2)

    def to3d(self, xy):
        return v_add(self.origin, v_add(v_scale(xy[0], self.e1), v_scale(xy[1], self.e2)))

    def seg_to2d(self, s):
        return Segment2(self.to2d(s.a), self.to2d(s.b), s.closed_a, s.closed_b)

    def line2d_to3d(self, rep):
        """Map a 2D representative ("line", a, b) or ("vertical", c) to 3D."""
        if rep[0] == "vertical":
            c = rep[1]
            return line_through(self.to3d((c, rat(0))), self.to3d((c, rat(1))))
        a, b = rep[1], rep[2]
        return line_through(self.to3d((rat(0), b)), self.to3d((rat(1), a + b)))

    def pencil_dir_to3d(self, q2, param):
        """Map a pencil direction parameter at 2D point q to a 3D line."""
        if param is INF:
            d2 = (rat(0), rat(1))
        else:
            d2 = (rat(1), param)
        p0 = self.to3d(q2)
        p1 = self.to3d((q2[0] + d2[0], q2[1] + d2[1]))
        return line_through(p0, p1)


def case_all_coplanar(segments3, plane):
    """Transversal set of segments all lying in one plane.

    Concurrent scenes produce the single component of all lines through the
    common point (plus in-plane stabbers, connected to it); otherwise every
    transversal lies in the plane and the dual-wedge machinery applies.
    """
    frame = Frame2(plane)
    segs2 = [frame.seg_to2d(s) for s in segments3]

    p = concurrent_point(segs2)
    if p is not None:
        p3 = frame.to3d(p)
        rep = LineRep(line_point_dir(p3, plane.normal))
        comp = Component(
            chart="point_bundle", arcs=(), representative=rep,
            isolated=False, anchor=p3, plane=plane,
        )
        return make_result(CONCURRENT, [comp])

    res = planar_components(segs2)
    comps = []
    for pc in res.components:
        rep = LineRep(frame.line2d_to3d(pc.representative))
        comps.append(
            Component(
                chart="affine" if pc.kind == "slopes" else "circle",
                arcs=(pc.arc,),
                representative=rep,
                isolated=pc.isolated,
                contains_vertical=pc.contains_vertical,
                plane=plane,
            )
        )
    assert len(comps) <= len(segments3), "component bound n violated"
    return make_result(COPLANAR, comps)
