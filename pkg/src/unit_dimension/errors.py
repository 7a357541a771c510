"""Exceptions raised by the unit_dimension library.

Every error is a ``ValueError`` so callers that only care about bad input can
catch that, while the CLI and the pipelines can tell the cases apart.
"""


class UnitDimensionError(ValueError):
    """Base class for all domain errors."""


class InvalidParameterError(UnitDimensionError):
    """A size or tolerance parameter is outside its allowed range."""


class LabelCollisionError(UnitDimensionError):
    """A vertex label clashes with a label reserved by a construction."""


class GraphStructureError(UnitDimensionError):
    """The edges given would not form a finite simple graph."""


class EdgeListParseError(GraphStructureError):
    """An edge-list document could not be parsed.

    Args:
        line_number: 1-based line of the offending input
        message: What went wrong on that line
    """

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class InvalidDirectedEdgeError(UnitDimensionError):
    """A directed edge does not correspond to an edge of the base graph."""


class EmbeddingMismatchError(UnitDimensionError):
    """An embedding does not match the graph (or itself) it is used with."""


class UnsupportedDimensionError(UnitDimensionError):
    """An operation was asked for an ambient dimension it cannot handle."""


class InconsistentBoundsError(UnitDimensionError):
    """A verified upper bound fell below a certified lower bound."""
