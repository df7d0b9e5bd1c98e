"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`RecolorError`,
so the CLI can map them to a single exit status.
"""


class RecolorError(Exception):
    """Base class for library errors."""


class GraphError(RecolorError, ValueError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class SelfLoop(GraphError):
    pass


class AdjacentPair(GraphError):
    pass


class EmptyPart(GraphError):
    pass


class EmptySet(GraphError):
    pass


class FullSet(GraphError):
    pass


class MalformedEncoding(GraphError):
    pass


class UnsupportedOrder(GraphError):
    pass


class InvalidSize(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class ColoringError(RecolorError, ValueError):
    pass


class ImproperColoring(ColoringError):
    pass


class LengthMismatch(ColoringError):
    pass


class PaletteMismatch(ColoringError):
    pass


class InvalidK(ColoringError):
    pass


class StateSpaceTooLarge(RecolorError):
    """The number of candidate colorings exceeds the configured guard."""

    def __init__(self, estimate, limit, graph=None):
        self.estimate = estimate
        self.limit = limit
        self.graph = graph
        where = f" (graph {graph})" if graph else ""
        super().__init__(
            f"estimated {estimate} colorings exceeds limit {limit}{where}; "
            "raise the limit explicitly"
        )


class ConstructionError(RecolorError, ValueError):
    pass


class OutOfRange(ConstructionError):
    pass


class NotFrozen(ConstructionError):
    pass


class ChiOmegaMismatch(ConstructionError):
    pass


class NotPlFree(ConstructionError):
    pass


class BadIndex(ConstructionError):
    pass


class UnknownScenario(RecolorError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class OrderTooLarge(RecolorError, ValueError):
    pass
