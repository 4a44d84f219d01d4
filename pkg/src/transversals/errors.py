"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for all domain errors."""


class CoincidentPoints(GeometryError):
    """Two points expected to be distinct coincide."""


class InvalidSegment(GeometryError):
    """Segment violates its construction invariants."""


class InvalidLine(GeometryError):
    """Line data violates the Pluecker constraint or has zero direction."""


class EmptyScene(GeometryError):
    """A scene with no segments was supplied."""


class NotPairwiseSkew(GeometryError):
    """Three lines expected to be pairwise skew are not."""


class SegmentNotInFirstRuling(GeometryError):
    """Segment's supporting line does not lie in the chart's first ruling."""


class ExcludedParam(GeometryError):
    """Chart parameter where the ruling line degenerates or goes parallel."""


class ChartMismatch(GeometryError):
    """Arcs from different charts were mixed in one intersection."""


class DuplicateLines(GeometryError):
    """Input lines expected to be pairwise distinct are not."""


class FewerThanTwoSegments(GeometryError):
    """Sampling oracle needs at least two segments."""


class UnsupportedN(GeometryError):
    """Requested scene size outside the generator's validity range."""


class SceneFormatError(GeometryError):
    """Scene file failed to parse or validate."""
