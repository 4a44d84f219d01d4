"""Arc sets on one-dimensional charts and their exact intersection.

Three chart kinds appear in the solver: an affine line (ruling of a
hyperbolic paraboloid, slopes of planar stabbers), a circle realized as the
projective line over a reference ruling line, and the pencil circle of
directions modulo a half-turn.  Circle and pencil arcs share one machinery:
parameters are exact rationals plus a single point at infinity, ordered
cyclically with INF as the cut point.

Intersections are computed by an endpoint sweep in O(n log n); endpoint
openness is tracked exactly, and isolated single-point components are first
class citizens.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ChartMismatch
from .scalars import rat


class _Infinity:
    """The point at infinity of a projective parameter line."""

    __slots__ = ()

    def __repr__(self):
        return "INF"


INF = _Infinity()


def pkey(x):
    """Linear sort key realizing the cyclic order with INF as the cut."""
    if x is INF:
        return (0, rat(0))
    return (1, x)


# ---------------------------------------------------------------------------
# affine intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineInterval:
    """[lo, hi] with per-end openness; a None bound means unbounded (open)."""

    lo: object = None
    hi: object = None
    closed_lo: bool = False
    closed_hi: bool = False

    def __post_init__(self):
        if self.lo is None and self.closed_lo:
            raise ValueError("unbounded end cannot be closed")
        if self.hi is None and self.closed_hi:
            raise ValueError("unbounded end cannot be closed")
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError("empty interval")
            if self.lo == self.hi and not (self.closed_lo and self.closed_hi):
                raise ValueError("degenerate interval must be closed")

    @property
    def is_point(self):
        return self.lo is not None and self.lo == self.hi


def affine_point(x):
    return AffineInterval(x, x, True, True)


def affine_contains(iv, x):
    if iv.lo is not None:
        if x < iv.lo or (x == iv.lo and not iv.closed_lo):
            return False
    if iv.hi is not None:
        if x > iv.hi or (x == iv.hi and not iv.closed_hi):
            return False
    return True


def intersect_affine(intervals):
    """Set intersection of affine intervals: zero or one component."""
    for iv in intervals:
        if not isinstance(iv, AffineInterval):
            raise ChartMismatch("intersect_affine expects affine intervals")
    lo, clo = None, False
    hi, chi = None, False
    for iv in intervals:
        if iv.lo is not None:
            if lo is None or iv.lo > lo:
                lo, clo = iv.lo, iv.closed_lo
            elif iv.lo == lo:
                clo = clo and iv.closed_lo
        if iv.hi is not None:
            if hi is None or iv.hi < hi:
                hi, chi = iv.hi, iv.closed_hi
            elif iv.hi == hi:
                chi = chi and iv.closed_hi
    if lo is not None and hi is not None:
        if lo > hi:
            return []
        if lo == hi:
            return [affine_point(lo)] if (clo and chi) else []
    return [AffineInterval(lo, hi, clo, chi)]


def remove_affine_points(components, points):
    """Remove puncture points, splitting components that contain them."""
    comps = list(components)
    for p in sorted(points):
        out = []
        for iv in comps:
            if not affine_contains(iv, p):
                out.append(iv)
            elif iv.is_point:
                pass  # single point removed entirely
            elif iv.lo is not None and p == iv.lo:
                out.append(replace(iv, closed_lo=False))
            elif iv.hi is not None and p == iv.hi:
                out.append(replace(iv, closed_hi=False))
            else:
                out.append(AffineInterval(iv.lo, p, iv.closed_lo, False))
                out.append(AffineInterval(p, iv.hi, False, iv.closed_hi))
        comps = out
    return comps


def affine_interior_sample(iv):
    """Some parameter inside the interval (any member for a point)."""
    if iv.is_point:
        return iv.lo
    if iv.lo is None and iv.hi is None:
        return rat(0)
    if iv.lo is None:
        return iv.hi - 1
    if iv.hi is None:
        return iv.lo + 1
    return (iv.lo + iv.hi) / 2


# ---------------------------------------------------------------------------
# circular arcs (circle and pencil charts)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CircArc:
    """Arc on a circular chart.

    kind "full" covers everything; "point" is the single parameter start;
    "span" runs forward (in cyclic order) from start to end.  A span with
    start == end and both ends open encodes the full circle minus a point.
    """

    chart: str  # "circle" | "pencil"
    kind: str  # "full" | "point" | "span"
    start: object = None
    end: object = None
    closed_start: bool = True
    closed_end: bool = True

    def __post_init__(self):
        if self.kind == "span" and self.start == self.end:
            if self.closed_start or self.closed_end:
                raise ValueError("degenerate span must be open at both ends")


def circ_full(chart):
    return CircArc(chart, "full")


def circ_point(chart, x):
    return CircArc(chart, "point", x, x)


def circ_span(chart, start, end, closed_start=True, closed_end=True):
    return CircArc(chart, "span", start, end, closed_start, closed_end)


def circ_contains(arc, x):
    if arc.kind == "full":
        return True
    if arc.kind == "point":
        return x == arc.start
    if x == arc.start and x == arc.end:
        return False  # full-minus-point arc
    if x == arc.start:
        return arc.closed_start
    if x == arc.end:
        return arc.closed_end
    ks, ke, kx = pkey(arc.start), pkey(arc.end), pkey(x)
    if ks == ke:
        return True  # full minus one point, x differs from it
    if ks < ke:
        return ks < kx < ke
    return kx > ks or kx < ke


def _check_same_chart(arcs):
    charts = {a.chart for a in arcs}
    if len(charts) > 1:
        raise ChartMismatch(f"mixed charts {sorted(charts)}")
    return charts.pop()


def intersect_circular(arcs):
    """Set intersection of circular arcs as maximal components.

    Endpoint sweep around the circle; output components are ordered by
    their start parameter in the cyclic order and never overlap.
    """
    arcs = list(arcs)
    if not arcs:
        return [circ_full("circle")]
    chart = _check_same_chart(arcs)

    points = [a for a in arcs if a.kind == "point"]
    spans = [a for a in arcs if a.kind == "span"]
    if points:
        x = points[0].start
        if all(p.start == x for p in points) and all(
            circ_contains(a, x) for a in arcs
        ):
            return [circ_point(chart, x)]
        return []
    if not spans:
        return [circ_full(chart)]

    params = sorted({a.start for a in spans} | {a.end for a in spans}, key=pkey)
    index = {p: i for i, p in enumerate(params)}
    m = len(params)
    ncells = 2 * m  # even cells: points; odd cells: open gaps after them
    diff = [0] * (ncells + 1)

    def add_range(a, b):
        if a <= b:
            diff[a] += 1
            diff[b + 1] -= 1
        else:
            diff[a] += 1
            diff[ncells] -= 1
            diff[0] += 1
            diff[b + 1] -= 1

    for a in spans:
        i, j = index[a.start], index[a.end]
        first = 2 * i if a.closed_start else 2 * i + 1
        last = 2 * j if a.closed_end else (2 * j - 1) % ncells
        add_range(first, last)

    need = len(spans)
    cov = 0
    feasible = []
    for c in range(ncells):
        cov += diff[c]
        feasible.append(cov == need)

    if all(feasible):
        return [circ_full(chart)]
    if not any(feasible):
        return []

    # maximal cyclic runs of feasible cells
    start_cell = 0
    while feasible[start_cell - 1]:  # rotate to a run boundary
        start_cell -= 1
    runs = []
    c = 0
    while c < ncells:
        cell = (start_cell + c) % ncells
        if not feasible[cell]:
            c += 1
            continue
        d = c
        while d + 1 < ncells and feasible[(start_cell + d + 1) % ncells]:
            d += 1
        runs.append(((start_cell + c) % ncells, (start_cell + d) % ncells))
        c = d + 2

    comps = []
    for first, last in runs:
        if first == last and first % 2 == 0:
            comps.append(circ_point(chart, params[first // 2]))
            continue
        if first % 2 == 0:
            s, cs = params[first // 2], True
        else:
            s, cs = params[first // 2], False
        if last % 2 == 0:
            e, ce = params[last // 2], True
        else:
            e, ce = params[(last // 2 + 1) % m], False
        comps.append(circ_span(chart, s, e, cs, ce))
    comps.sort(key=lambda a: pkey(a.start))
    return comps


def remove_circular_points(components, points):
    """Remove puncture parameters, splitting arcs that contain them."""
    comps = list(components)
    for p in points:
        out = []
        for arc in comps:
            if not circ_contains(arc, p):
                out.append(arc)
            elif arc.kind == "point":
                pass
            elif arc.kind == "full":
                out.append(circ_span(arc.chart, p, p, False, False))
            elif p == arc.start:
                out.append(replace(arc, closed_start=False))
            elif p == arc.end:
                out.append(replace(arc, closed_end=False))
            else:
                out.append(circ_span(arc.chart, arc.start, p, arc.closed_start, False))
                out.append(circ_span(arc.chart, p, arc.end, False, arc.closed_end))
        comps = out
    return comps


def circ_interior_sample(arc):
    """Some parameter inside the arc (the value itself for a point arc)."""
    if arc.kind == "point":
        return arc.start
    if arc.kind == "full":
        return rat(0)
    s, e = arc.start, arc.end
    if s == e:  # full minus a point
        return INF if s is not INF else rat(0)
    if s is INF:
        return (e - 1) if e is not INF else rat(0)
    if e is INF:
        return s + 1
    if pkey(s) < pkey(e):
        return (s + e) / 2
    return s + 1  # wrapping span: still inside just past the start


def component_count_bound(n):
    """Upper bound on component counts used as an assertion hook."""
    if n < 0:
        raise ValueError("negative count")
    return n
