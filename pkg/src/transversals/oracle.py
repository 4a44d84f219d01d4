"""Independent verification tools.

is_transversal is the ground-truth membership test every reported
representative must pass.  transversals_to_4_lines solves the classical
four-line problem directly (quadric intersection for a skew triple, a
small case tree otherwise) and cross-checks the segment pipeline on long
segments.  sampled_components estimates connected-component counts from a
two-point line sample grid; it is a lower bound that reaches the true
count once the resolution separates the features.
"""

from __future__ import annotations

from itertools import combinations

from .core import (
    classify_pair,
    line_contains_point,
    line_meets_segment,
    line_plane_meet,
    line_through,
    lines_meet,
    plane_from_line_hpoint,
    plane_through_point_line,
    point_on_line,
    reciprocal_product,
    same_line,
    v_add,
    v_dot,
    v_scale,
    v_sub,
)
from .errors import DuplicateLines, FewerThanTwoSegments
from .quadric import line_on_quadric, line_vs_quadric, quadric_through, ruling_line_through
from .reduction import line_in_plane
from .scalars import quadratic_roots_exact, rat


def is_transversal(line_or_rep, segments):
    """Exact: does the line meet every segment's point set?"""
    line = getattr(line_or_rep, "line", line_or_rep)
    return all(line_meets_segment(line, s) for s in segments)


# ---------------------------------------------------------------------------
# exact four-line solver
# ---------------------------------------------------------------------------

def _common_plane_of(l1, l2):
    p2 = point_on_line(l2)
    pl = plane_from_line_hpoint(l1, (p2[0], p2[1], p2[2], 1))
    if pl is None:
        p2 = v_add(p2, l2.direction)
        pl = plane_from_line_hpoint(l1, (p2[0], p2[1], p2[2], 1))
    return pl


def _skew_triple_path(gens, witness):
    q = quadric_through(*gens)
    if line_on_quadric(witness, q):
        if reciprocal_product(witness, gens[0]) != 0:
            # witness joins the generators' ruling: the whole other ruling
            # qualifies, minus finitely many parallels
            return ("infinite", "other ruling of the common quadric")
        cands = [witness]
    else:
        hit = line_vs_quadric(witness, q)
        if hit[0] == "empty":
            cands = []
        elif hit[0] in ("one", "tangent"):
            cands = [ruling_line_through(gens, hit[1])]
        elif hit[0] == "secant":
            cands = [ruling_line_through(gens, hit[1]),
                     ruling_line_through(gens, hit[2])]
        else:
            c2, c1, c0 = hit[1]
            roots = quadratic_roots_exact(c2, c1, c0)
            base = point_on_line(witness)
            cands = [
                ruling_line_through(gens, v_add(base, v_scale(t, witness.direction)))
                for t in (roots[1], roots[2])
            ]
    lines4 = list(gens) + [witness]
    return ("finite", [c for c in cands if all(lines_meet(c, l) for l in lines4)])


def _pencil_side(center, plane, lines4):
    """Lines in `plane` through `center` meeting four lines.

    Returns ("infinite",), ("candidates", [lines]), or ("empty",).
    """
    pinned = []
    for l in lines4:
        if line_contains_point(l, center):
            continue
        if line_in_plane(l, plane):
            continue  # all but at most one direction of the pencil meet it
        hit = line_plane_meet(l, plane)
        if hit[0] == "parallel":
            return ("empty",)
        x = hit[1]
        if x == center:
            continue
        pinned.append(x)
    if not pinned:
        return ("infinite",)
    cand = line_through(center, pinned[0])
    for x in pinned[1:]:
        if not line_contains_point(cand, x):
            return ("empty",)
    return ("candidates", [cand])


def transversals_to_4_lines(l1, l2, l3, l4):
    """All transversals to four pairwise distinct lines.

    Returns ("finite", [lines]) with 0, 1 or 2 entries (surd coordinates
    when the pinning quadratic is irrational) or ("infinite", description).
    """
    lines4 = [l1, l2, l3, l4]
    for a, b in combinations(lines4, 2):
        if same_line(a, b):
            raise DuplicateLines("input lines must be pairwise distinct")

    for combo in combinations(range(4), 3):
        tri = [lines4[i] for i in combo]
        if all(
            reciprocal_product(tri[a], tri[b]) != 0
            for a, b in ((0, 1), (0, 2), (1, 2))
        ):
            rest = next(i for i in range(4) if i not in combo)
            return _skew_triple_path(tuple(tri), lines4[rest])

    # no skew triple: start from some coplanar pair
    pair = next(
        (i, j)
        for i, j in combinations(range(4), 2)
        if reciprocal_product(lines4[i], lines4[j]) == 0
    )
    la, lb = lines4[pair[0]], lines4[pair[1]]
    others = [lines4[k] for k in range(4) if k not in pair]
    verdict = classify_pair(la, lb)
    plane_h = _common_plane_of(la, lb)

    if verdict[0] == "parallel":
        # every transversal has two distinct points in H, so it lies in H
        pts = []
        for l in others:
            if line_in_plane(l, plane_h):
                continue
            hit = line_plane_meet(l, plane_h)
            if hit[0] == "parallel":
                return ("finite", [])
            pts.append(hit[1])
        uniq = []
        for p in pts:
            if p not in uniq:
                uniq.append(p)
        if len(uniq) >= 2:
            cand = line_through(uniq[0], uniq[1])
            if all(lines_meet(cand, l) for l in lines4):
                return ("finite", [cand])
            return ("finite", [])
        if len(uniq) == 1:
            return ("infinite", "pencil in the common plane")
        return ("infinite", "coplanar lines")

    p = verdict[1]
    off = [l for l in others if not line_in_plane(l, plane_h)]
    if not off:
        return ("infinite", "coplanar lines")
    for l in off:
        if v_dot(plane_h.normal, l.direction) == 0:
            plane_k = plane_through_point_line(p, l)
            side = _pencil_side(p, plane_k, lines4)
            if side[0] == "infinite":
                return ("infinite", "pencil through the pair point")
            if side[0] == "empty":
                return ("finite", [])
            cands = [c for c in side[1] if all(lines_meet(c, m) for m in lines4)]
            return ("finite", cands)
    crossings = [line_plane_meet(l, plane_h)[1] for l in off]
    if all(x == p for x in crossings):
        return ("infinite", "bundle through the common point")
    q = next(x for x in crossings if x != p)
    l3o = off[crossings.index(q)]
    plane_k = plane_through_point_line(p, l3o)

    total = []
    for center, plane in ((p, plane_k), (q, plane_h)):
        side = _pencil_side(center, plane, lines4)
        if side[0] == "infinite":
            return ("infinite", "pencil through %s" % ("p" if center == p else "q"))
        if side[0] == "candidates":
            total.extend(side[1])
    survivors = []
    for c in total:
        if all(lines_meet(c, l) for l in lines4) and not any(
            same_line(c, s) for s in survivors
        ):
            survivors.append(c)
    return ("finite", survivors)


# ---------------------------------------------------------------------------
# sampling estimator
# ---------------------------------------------------------------------------

def sampled_components(segments, resolution):
    """Estimated component count from a two-point sampling grid.

    Lines through grid points of the first two segments (parameter step
    1/resolution, endpoints included) are filtered with is_transversal;
    samples adjacent on the grid are linked.  The count is a lower bound on
    the true number of components and reaches it when the resolution
    separates the features.
    """
    if len(segments) < 2:
        raise FewerThanTwoSegments("sampling needs two carrier segments")
    if resolution < 10:
        raise ValueError("resolution must be at least 10")
    s1, s2 = segments[0], segments[1]
    params = [rat(i, resolution) for i in range(resolution + 1)]
    pts1 = [v_add(s1.a, v_scale(t, v_sub(s1.b, s1.a))) for t in params]
    pts2 = [v_add(s2.a, v_scale(t, v_sub(s2.b, s2.a))) for t in params]

    hits = {}
    for i, a in enumerate(pts1):
        for j, b in enumerate(pts2):
            if a == b:
                continue
            if is_transversal(line_through(a, b), segments):
                hits[(i, j)] = (i, j)

    parent = dict(hits)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j) in hits:
        for nb in ((i + 1, j), (i, j + 1)):
            if nb in hits:
                ra, rb = find((i, j)), find(nb)
                if ra != rb:
                    parent[ra] = rb
    return len({find(k) for k in hits})
