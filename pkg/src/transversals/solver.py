"""Top-level pipeline: reduce, classify, dispatch, assemble.

solve() is a pure function of the segment set: reduction sorts by
canonical supporting-line keys, so witness choices and component order do
not depend on input order.  One- and two-segment scenes get closed-form
answers (always infinitely many transversals, one component).
"""

from __future__ import annotations

from .core import line_through, supporting_line
from .errors import EmptyScene
from .pencil import case_two_coplanar
from .planar import case_all_coplanar
from .quadric import case_three_skew
from .reduction import classify_case, reduce_collinear
from .result import GENERIC_SMALL, Component, LineRep, make_result
from .scalars import rat


def _small_case(segments):
    if len(segments) == 1:
        rep = LineRep(supporting_line(segments[0]))
        comp = Component(None, (), rep, False)
        return make_result(GENERIC_SMALL, [comp])
    s1, s2 = segments
    m1 = s1.interior_point()
    m2 = s2.interior_point()
    if m1 == m2:
        m1 = s1.interior_point(rat(1, 4))
    rep = LineRep(line_through(m1, m2))
    comp = Component(None, (), rep, False)
    return make_result(GENERIC_SMALL, [comp])


def solve(segments):
    """Exact transversal set of a list of Segment3."""
    if not segments:
        raise EmptyScene("no segments")
    outcome = reduce_collinear(segments)
    if outcome[0] == "early":
        return outcome[1]
    reduced = outcome[1]
    n = len(reduced.segments)
    if n <= 2:
        result = _small_case(reduced.segments)
    else:
        tag = classify_case(reduced)
        if tag.kind == "three_skew":
            result = case_three_skew(reduced.segments, reduced.lines, tag.witness)
        elif tag.kind == "all_coplanar":
            result = case_all_coplanar(reduced.segments, tag.plane)
        else:
            result = case_two_coplanar(reduced, tag)
    if result.cardinality == "finite":
        assert result.count <= n, "finite count exceeds the segment bound"
    else:
        assert 1 <= len(result.components) <= n, "component bound violated"
    return result


def classify(segments):
    """Classification label only (same pipeline as solve)."""
    return solve(segments).classification
