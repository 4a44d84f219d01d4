"""Exact line transversals to segments in R^3.

Computes, exactly, whether n segments admit 0, 1, ..., n or infinitely
many common transversal lines, and describes every connected component of
the transversal set with an explicit chart and a representative line.
"""

from .core import (
    Line3,
    Plane,
    Segment3,
    classify_pair,
    line_meets_segment,
    line_through,
    reciprocal_product,
    supporting_line,
)
from .errors import (
    ChartMismatch,
    CoincidentPoints,
    DuplicateLines,
    EmptyScene,
    ExcludedParam,
    FewerThanTwoSegments,
    GeometryError,
    InvalidLine,
    InvalidSegment,
    NotPairwiseSkew,
    SceneFormatError,
    SegmentNotInFirstRuling,
    UnsupportedN,
)
from .oracle import is_transversal, sampled_components, transversals_to_4_lines
from .result import Component, TransversalSet
from .scalars import parse_scalar, rat
from .solver import classify, solve

__all__ = [
    "ChartMismatch",
    "CoincidentPoints",
    "Component",
    "DuplicateLines",
    "EmptyScene",
    "ExcludedParam",
    "FewerThanTwoSegments",
    "GeometryError",
    "InvalidLine",
    "InvalidSegment",
    "Line3",
    "NotPairwiseSkew",
    "Plane",
    "SceneFormatError",
    "Segment3",
    "SegmentNotInFirstRuling",
    "TransversalSet",
    "UnsupportedN",
    "classify",
    "classify_pair",
    "is_transversal",
    "line_meets_segment",
    "line_through",
    "parse_scalar",
    "rat",
    "reciprocal_product",
    "sampled_components",
    "solve",
    "supporting_line",
    "transversals_to_4_lines",
]

__version__ = "0.1.0"
