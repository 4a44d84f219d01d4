"""Result model: transversal sets, their components, and representatives."""

from __future__ import annotations

from dataclasses import dataclass, field

from .intervals import INF, AffineInterval, CircArc, pkey

# classification labels
GENERIC = "generic"
GENERIC_SMALL = "generic_small"
RULING_HP = "ruling_hp"
RULING_H1 = "ruling_h1"
CONCURRENT = "concurrent"
PLANE_PLUS_PENCIL = "plane_plus_pencil"
TWO_PENCILS = "two_pencils"
COPLANAR = "coplanar"
EMPTY = "empty"

_CHART_RANK = {
    "affine": 0,
    "circle": 1,
    "pencil": 2,
    "two_pencils": 3,
    "point_bundle": 4,
    None: 5,
}


@dataclass(frozen=True)
class LineRep:
    """Exact rational representative line."""

    line: object  # Line3


@dataclass(frozen=True)
class AlgebraicLineRep:
    """Representative line whose chart parameter is a quadratic irrational.

    The line is the ruling transversal at parameter t on witness_line, where
    t is the root of quadratic (ascending root order selected by
    root_index).  line carries exact surd coordinates for predicate use.
    """

    quadratic: tuple  # (c2, c1, c0) exact rationals
    root_index: int  # 0 = smaller root, 1 = larger root
    witness_line: object  # rational Line3 carrying the parameter
    line: object  # Line3 over SqrtExt coordinates


@dataclass(frozen=True)
class Component:
    """One connected component of the transversal set."""

    chart: object  # chart name or None for chartless isolated lines
    arcs: tuple  # (), (arc,), or a pair for two_pencils components
    representative: object  # LineRep | AlgebraicLineRep
    isolated: bool
    contains_vertical: bool = False
    anchor: object = None  # pencil center / bundle point, when meaningful
    plane: object = None  # carrying plane, when meaningful
    anchor2: object = None  # second pencil center (two_pencils)
    plane2: object = None


@dataclass
class TransversalSet:
    """Classification plus the full list of connected components."""

    classification: str
    cardinality: str  # "finite" | "infinite"
    components: list = field(default_factory=list)

    @property
    def count(self):
        return len(self.components) if self.cardinality == "finite" else None


def _endpoint_key(x):
    if x is None:
        return (0, 0, 0)
    if x is INF:
        return (1, 0, 0)
    return (2, x, 0)


def _arc_key(arc):
    if isinstance(arc, AffineInterval):
        return (0,) + _endpoint_key(arc.lo) + _endpoint_key(arc.hi)
    if isinstance(arc, CircArc):
        rank = {"full": 0, "point": 1, "span": 2}[arc.kind]
        return (1, rank, 0) + _endpoint_key(arc.start) + _endpoint_key(arc.end)
    return (2, 0, 0, 0, 0, 0, 0, 0)


def component_sort_key(comp):
    k = (_CHART_RANK.get(comp.chart, 9),)
    if comp.arcs:
        k += _arc_key(comp.arcs[0])
    else:
        k += (9, 0, 0, 0, 0, 0, 0)
    return k


def make_result(classification, components):
    """Assemble a TransversalSet with canonical component order.

    Cardinality is finite exactly when every component is an isolated line;
    an empty component list is classified as empty regardless of the label
    suggested by the construction.
    """
    comps = sorted(components, key=component_sort_key)
    if not comps:
        return TransversalSet(EMPTY, "finite", [])
    finite = all(c.isolated for c in comps)
    return TransversalSet(classification, "finite" if finite else "infinite", comps)
