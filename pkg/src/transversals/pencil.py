"""Two coplanar supporting lines: the decision tree of the pencil case.

With a coplanar witness pair in a plane H the problem either collapses
into a single plane (handled by the coplanar engine) or splits into two
pencils: lines in H through a point q plus lines in a second plane K
through the pair's intersection p.  The line pq belongs to both pencils,
and the two components containing it are really one, which is where the
n - 1 bound comes from.
"""

from __future__ import annotations

from .core import (
    Segment3,
    line_contains_point,
    line_meets_segment,
    line_plane_meet,
    line_through,
    plane_through_point_line,
    segment_contains_point,
    segment_in_plane,
    segment_plane_meet,
    v_dot,
)
from .intervals import circ_contains, circ_interior_sample
from .planar import (
    Frame2,
    case_all_coplanar,
    direction_param,
    pencil_through_point,
    sub2,
)
from .reduction import line_in_plane
from .result import (
    COPLANAR,
    EMPTY,
    GENERIC,
    PLANE_PLUS_PENCIL,
    TWO_PENCILS,
    Component,
    LineRep,
    make_result,
)


def _restrict_to_plane(segments, plane):
    """Each segment replaced by its intersection with the plane, or None."""
    out = []
    for s in segments:
        hit = segment_plane_meet(s, plane)
        if hit[0] == "empty":
            return None
        if hit[0] == "point":
            out.append(Segment3(hit[1], hit[1]))
        else:
            out.append(hit[1])
    return out


def _delegate_plane(segments, plane):
    """All transversals lie in `plane`: restrict and run the 2D engine."""
    restricted = _restrict_to_plane(segments, plane)
    if restricted is None:
        return make_result(EMPTY, [])
    res = case_all_coplanar(restricted, plane)
    if res.classification == COPLANAR:
        res.classification = PLANE_PLUS_PENCIL
    return res


def case_two_coplanar(reduced, tag):
    """Transversal set when the witness pair of supporting lines is coplanar."""
    segments = reduced.segments
    lines = reduced.lines
    plane_h = tag.plane
    verdict = tag.pair

    if verdict[0] == "parallel":
        return _delegate_plane(segments, plane_h)

    p = verdict[1]  # the pair's intersection point

    off = [i for i in range(len(lines)) if not line_in_plane(lines[i], plane_h)]
    if not off:
        return case_all_coplanar(segments, plane_h)

    for i in off:
        if v_dot(plane_h.normal, lines[i].direction) == 0:
            # off-plane line parallel to H: everything happens in the plane
            # through p and that line
            plane_k = plane_through_point_line(p, lines[i])
            return _delegate_plane(segments, plane_k)

    if all(line_contains_point(lines[i], p) for i in off):
        off_segs = [segments[i] for i in off]
        if all(segment_contains_point(s, p) for s in off_segs):
            replaced = [
                Segment3(p, p) if i in off else segments[i]
                for i in range(len(segments))
            ]
            res = case_all_coplanar(replaced, plane_h)
            if res.classification == COPLANAR:
                res.classification = PLANE_PLUS_PENCIL
            return res
        # some off-plane segment misses p: its supporting line (which does
        # pass through p) is the only possible transversal
        for i in off:
            if not segment_contains_point(segments[i], p):
                cand = lines[i]
                if all(line_meets_segment(cand, s) for s in segments):
                    comp = Component(None, (), LineRep(cand), True)
                    return make_result(GENERIC, [comp])
                return make_result(EMPTY, [])

    l3_idx = next(i for i in off if not line_contains_point(lines[i], p))
    # that supporting line crosses H at exactly one point q != p
    q = line_plane_meet(lines[l3_idx], plane_h)[1]
    plane_k = plane_through_point_line(p, lines[l3_idx])

    contains_p = [segment_contains_point(s, p) for s in segments]
    contains_q = [segment_contains_point(s, q) for s in segments]
    in_h = [segment_in_plane(s, plane_h) for s in segments]
    in_k = [segment_in_plane(s, plane_k) for s in segments]

    for i, s in enumerate(segments):
        if in_h[i] or in_k[i] or contains_p[i] or contains_q[i]:
            continue
        # s avoids both planes and both points: at most two candidates
        cands = []
        hk = segment_plane_meet(s, plane_k)
        if hk[0] == "point":
            cands.append(line_through(p, hk[1]))
        hh = segment_plane_meet(s, plane_h)
        if hh[0] == "point":
            cands.append(line_through(q, hh[1]))
        comps = [
            Component(None, (), LineRep(c), True)
            for c in cands
            if all(line_meets_segment(c, t) for t in segments)
        ]
        return make_result(GENERIC, comps)

    for i, s in enumerate(segments):
        if not contains_p[i] and not contains_q[i] and in_h[i]:
            return _delegate_plane(segments, plane_h)
    for i, s in enumerate(segments):
        if not contains_p[i] and not contains_q[i] and in_k[i]:
            return _delegate_plane(segments, plane_k)

    # every segment passes through p or q: two pencils, merged along pq
    frame_h = Frame2(plane_h)
    frame_k = Frame2(plane_k)
    q2h = frame_h.to2d(q)
    p2k = frame_k.to2d(p)

    h_side = []
    for i, s in enumerate(segments):
        if contains_q[i]:
            continue
        hit = segment_plane_meet(s, plane_h)
        assert hit[0] != "empty", "segment through p must touch H"
        piece = Segment3(hit[1], hit[1]) if hit[0] == "point" else hit[1]
        h_side.append(frame_h.seg_to2d(piece))
    k_side = []
    for i, s in enumerate(segments):
        if contains_p[i]:
            continue
        hit = segment_plane_meet(s, plane_k)
        assert hit[0] != "empty", "segment through q must touch K"
        piece = Segment3(hit[1], hit[1]) if hit[0] == "point" else hit[1]
        k_side.append(frame_k.seg_to2d(piece))

    h_comps = pencil_through_point(q2h, h_side)
    k_comps = pencil_through_point(p2k, k_side)

    pq = line_through(p, q)
    assert all(line_meets_segment(pq, s) for s in segments)
    dir_h = direction_param(sub2(frame_h.to2d(p), q2h))
    dir_k = direction_param(sub2(frame_k.to2d(q), p2k))
    ih = next(i for i, a in enumerate(h_comps) if circ_contains(a, dir_h))
    ik = next(i for i, a in enumerate(k_comps) if circ_contains(a, dir_k))

    comps = []
    for i, arc in enumerate(h_comps):
        if i == ih:
            continue
        rep = LineRep(frame_h.pencil_dir_to3d(q2h, circ_interior_sample(arc)))
        comps.append(
            Component("pencil", (arc,), rep, arc.kind == "point",
                      anchor=q, plane=plane_h)
        )
    for i, arc in enumerate(k_comps):
        if i == ik:
            continue
        rep = LineRep(frame_k.pencil_dir_to3d(p2k, circ_interior_sample(arc)))
        comps.append(
            Component("pencil", (arc,), rep, arc.kind == "point",
                      anchor=p, plane=plane_k)
        )
    merged_isolated = (
        h_comps[ih].kind == "point" and k_comps[ik].kind == "point"
    )
    comps.append(
        Component(
            "two_pencils", (h_comps[ih], k_comps[ik]), LineRep(pq),
            merged_isolated, anchor=q, plane=plane_h, anchor2=p, plane2=plane_k,
        )
    )
    n_p = len(k_side)
    n_q = len(h_side)
    assert len(comps) <= n_p + n_q - 1 <= len(segments) - 1
    return make_result(TWO_PENCILS, comps)
