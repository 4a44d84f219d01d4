"""Scene and result JSON formats.

Scene files carry exact coordinates as strings ("1.25" decimals or "5/4"
fractions; integers are also accepted); binary floats are rejected so no
rounding can leak into the predicates.  Unknown fields are rejected.
Result files serialize every chart endpoint exactly; circle and pencil
endpoints appear as projective pairs [t0, t1] with ["1", "0"] the point
at infinity.
"""

from __future__ import annotations

import json

from .core import Segment3, point_on_line
from .errors import SceneFormatError
from .intervals import INF, AffineInterval, CircArc
from .result import AlgebraicLineRep, LineRep
from .scalars import format_scalar, parse_scalar, quadratic_roots_exact, rat

_SEGMENT_FIELDS = {"a", "b", "closed_a", "closed_b"}


def parse_scene(doc):
    """Validate a scene document and build the segment list."""
    if not isinstance(doc, dict):
        raise SceneFormatError("scene must be a JSON object")
    unknown = set(doc) - {"segments"}
    if unknown:
        raise SceneFormatError(f"unknown scene fields: {sorted(unknown)}")
    segs = doc.get("segments")
    if not isinstance(segs, list) or not segs:
        raise SceneFormatError("scene needs a nonempty 'segments' array")
    out = []
    for i, entry in enumerate(segs):
        if not isinstance(entry, dict):
            raise SceneFormatError(f"segment {i} must be an object")
        unknown = set(entry) - _SEGMENT_FIELDS
        if unknown:
            raise SceneFormatError(f"segment {i}: unknown fields {sorted(unknown)}")
        try:
            a = _parse_point(entry["a"])
            b = _parse_point(entry["b"])
        except KeyError as exc:
            raise SceneFormatError(f"segment {i}: missing endpoint {exc}") from exc
        except ValueError as exc:
            raise SceneFormatError(f"segment {i}: {exc}") from exc
        ca = entry.get("closed_a", True)
        cb = entry.get("closed_b", True)
        if not isinstance(ca, bool) or not isinstance(cb, bool):
            raise SceneFormatError(f"segment {i}: closed flags must be booleans")
        try:
            out.append(Segment3(a, b, ca, cb))
        except Exception as exc:
            raise SceneFormatError(f"segment {i}: {exc}") from exc
    return out


def _parse_point(val):
    if not isinstance(val, list) or len(val) != 3:
        raise ValueError("endpoint must be a 3-element array")
    return tuple(parse_scalar(c) for c in val)


def parse_scene_text(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"invalid JSON: {exc}") from exc
    return parse_scene(doc)


def scene_to_doc(segments):
    out = []
    for s in segments:
        entry = {
            "a": [format_scalar(c) for c in s.a],
            "b": [format_scalar(c) for c in s.b],
        }
        if not s.closed_a:
            entry["closed_a"] = False
        if not s.closed_b:
            entry["closed_b"] = False
        out.append(entry)
    return {"segments": out}


# ---------------------------------------------------------------------------
# result serialization
# ---------------------------------------------------------------------------

def _proj(t):
    if t is INF:
        return ["1", "0"]
    return [format_scalar(t), "1"]


def _arc_to_doc(arc):
    if isinstance(arc, AffineInterval):
        return {
            "kind": "interval",
            "lo": None if arc.lo is None else format_scalar(arc.lo),
            "hi": None if arc.hi is None else format_scalar(arc.hi),
            "closed_lo": arc.closed_lo,
            "closed_hi": arc.closed_hi,
            "punctures": [],
        }
    if isinstance(arc, CircArc):
        doc = {"kind": arc.kind, "punctures": []}
        if arc.kind != "full":
            doc["start"] = _proj(arc.start)
            doc["end"] = _proj(arc.end)
            doc["closed_start"] = arc.closed_start
            doc["closed_end"] = arc.closed_end
        return doc
    raise TypeError(f"unknown arc {arc!r}")


def _point_doc(p):
    return [format_scalar(c) for c in p]


def _line_doc(line):
    return {
        "point": _point_doc(point_on_line(line)),
        "direction": _point_doc(line.direction),
    }


def _representative_doc(rep):
    if isinstance(rep, LineRep):
        return _line_doc(rep.line)
    if isinstance(rep, AlgebraicLineRep):
        c2, c1, c0 = rep.quadratic
        roots = quadratic_roots_exact(c2, c1, c0)
        root = roots[1 + rep.root_index]
        lo, hi = root.enclosure(rat(1, 2**32))
        return {
            "quadratic": [format_scalar(c) for c in (c2, c1, c0)],
            "root": rep.root_index,
            "isolating_interval": [format_scalar(lo), format_scalar(hi)],
            "witness_line": _line_doc(rep.witness_line),
        }
    raise TypeError(f"unknown representative {rep!r}")


def _plane_doc(plane):
    if plane is None:
        return None
    return {
        "normal": _point_doc(plane.normal),
        "offset": format_scalar(plane.offset),
    }


def result_to_doc(res):
    comps = []
    for c in res.components:
        if len(c.arcs) == 2:
            arc_doc = {
                "kind": "pair",
                "first": _arc_to_doc(c.arcs[0]),
                "second": _arc_to_doc(c.arcs[1]),
            }
        elif len(c.arcs) == 1:
            arc_doc = _arc_to_doc(c.arcs[0])
        else:
            arc_doc = None
        comp = {
            "chart": c.chart,
            "arc": arc_doc,
            "representative": _representative_doc(c.representative),
            "isolated": c.isolated,
        }
        if c.contains_vertical:
            comp["contains_vertical"] = True
        if c.anchor is not None:
            comp["anchor"] = _point_doc(c.anchor)
        if c.plane is not None:
            comp["plane"] = _plane_doc(c.plane)
        if c.anchor2 is not None:
            comp["anchor2"] = _point_doc(c.anchor2)
        if c.plane2 is not None:
            comp["plane2"] = _plane_doc(c.plane2)
        comps.append(comp)
    return {
        "classification": res.classification,
        "cardinality": res.cardinality,
        "count": res.count,
        "components": comps,
    }


def dump_json(doc):
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
