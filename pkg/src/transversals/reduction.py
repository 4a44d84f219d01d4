"""Scene reduction and case dispatch.

Segments sharing a supporting line are replaced by their common
intersection; disjoint collinear segments leave their shared line as the
only possible transversal, answered immediately.  The reduced scene is
sorted by canonical Pluecker keys, which makes every later witness choice
a function of the segment set rather than of input order.  Dispatch then
picks one of the three governing cases with a constant-size scan: the
cases overlap, and any valid witness leads to a correct answer downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Segment3,
    classify_pair,
    line_meets_segment,
    plane_from_line_hpoint,
    point_in_plane,
    point_on_line,
    reciprocal_product,
    supporting_line,
    v_add,
    v_dot,
    v_scale,
    v_sub,
)
from .errors import EmptyScene
from .intervals import AffineInterval, affine_point, intersect_affine
from .result import GENERIC, Component, LineRep, make_result


@dataclass
class ReducedScene:
    """Segments with pairwise distinct supporting lines, canonically sorted."""

    segments: list
    lines: list
    provenance: list  # provenance[i] = original indices merged into segment i


@dataclass(frozen=True)
class CaseTag:
    kind: str  # "three_skew" | "two_coplanar" | "all_coplanar"
    witness: tuple
    plane: object = None  # common plane for the coplanar kinds
    pair: object = None  # classify_pair verdict for the witness pair


def _params_on_line(line, seg):
    base = point_on_line(line)
    d = line.direction
    den = v_dot(d, d)
    ta = v_dot(v_sub(seg.a, base), d) / den
    if seg.is_point:
        return affine_point(ta)
    tb = v_dot(v_sub(seg.b, base), d) / den
    if ta < tb:
        return AffineInterval(ta, tb, seg.closed_a, seg.closed_b)
    return AffineInterval(tb, ta, seg.closed_b, seg.closed_a)


def _segment_from_interval(line, iv):
    base = point_on_line(line)
    d = line.direction
    pa = v_add(base, v_scale(iv.lo, d))
    if iv.is_point:
        return Segment3(pa, pa)
    pb = v_add(base, v_scale(iv.hi, d))
    return Segment3(pa, pb, iv.closed_lo, iv.closed_hi)


def reduce_collinear(scene):
    """Collapse shared supporting lines; may answer the scene outright.

    Returns ("reduced", ReducedScene) or ("early", TransversalSet) when a
    disjoint collinear group pins the answer to at most one line.
    """
    if not scene:
        raise EmptyScene("no segments")
    work = [(s, [i]) for i, s in enumerate(scene)]
    while True:
        groups = {}
        for seg, prov in work:
            line = supporting_line(seg)
            groups.setdefault(line.canonical(), []).append((line, seg, prov))
        if all(len(g) == 1 for g in groups.values()):
            break
        new_work = []
        forced_lines = []
        for key in sorted(groups):
            entries = groups[key]
            if len(entries) == 1:
                new_work.append((entries[0][1], entries[0][2]))
                continue
            line = entries[0][0]
            common = intersect_affine([_params_on_line(line, s) for _, s, _ in entries])
            prov = sorted({i for _, _, pr in entries for i in pr})
            if not common:
                forced_lines.append(line)
                continue
            new_work.append((_segment_from_interval(line, common[0]), prov))
        if forced_lines:
            if len(forced_lines) == 1:
                forced = forced_lines[0]
                if all(line_meets_segment(forced, s) for s in scene):
                    comp = Component(None, (), LineRep(forced), True)
                    return ("early", make_result(GENERIC, [comp]))
            # two distinct forced lines cannot both be the one transversal
            return ("early", make_result(GENERIC, []))
        work = new_work

    work.sort(key=lambda e: supporting_line(e[0]).canonical())
    segments = [seg for seg, _ in work]
    lines = [supporting_line(seg) for seg in segments]
    return ("reduced", ReducedScene(segments, lines, [prov for _, prov in work]))


def line_in_plane(line, plane):
    return v_dot(plane.normal, line.direction) == 0 and point_in_plane(
        point_on_line(line), plane
    )


def _common_plane(l1, l2):
    """The plane spanned by two coplanar distinct lines."""
    p2 = point_on_line(l2)
    hp = (p2[0], p2[1], p2[2], 1)
    pl = plane_from_line_hpoint(l1, hp)
    if pl is None:  # p2 happened to lie on l1; slide along l2
        p2 = v_add(p2, l2.direction)
        pl = plane_from_line_hpoint(l1, (p2[0], p2[1], p2[2], 1))
    return pl


def classify_case(reduced):
    """Select the governing case with a linear scan.

    The first two lines decide: a coplanar pair reports two_coplanar (or
    all_coplanar when everything lies in their plane); a skew pair plus any
    third line skew to both yields three_skew, and if no such third line
    exists every remaining line is coplanar with one of the two, which is a
    valid two_coplanar witness.
    """
    lines = reduced.lines
    segments = reduced.segments
    n = len(lines)
    if n < 3:
        raise ValueError("classify_case needs at least 3 reduced segments")

    l1, l2 = lines[0], lines[1]
    verdict = classify_pair(l1, l2)
    if verdict[0] != "skew":
        plane = _common_plane(l1, l2)
        if all(
            point_in_plane(s.a, plane) and point_in_plane(s.b, plane)
            for s in segments
        ):
            return CaseTag("all_coplanar", (0, 1), plane, verdict)
        return CaseTag("two_coplanar", (0, 1), plane, verdict)

    for j in range(2, n):
        if (
            reciprocal_product(lines[j], l1) != 0
            and reciprocal_product(lines[j], l2) != 0
        ):
            return CaseTag("three_skew", (0, 1, j))

    for j in range(2, n):
        if reciprocal_product(lines[j], l1) == 0:
            pair = (0, j)
        else:
            pair = (1, j)
        la, lb = lines[pair[0]], lines[pair[1]]
        verdict = classify_pair(la, lb)
        plane = _common_plane(la, lb)
        return CaseTag("two_coplanar", pair, plane, verdict)
    raise AssertionError("unreachable")  # pragma: no cover
