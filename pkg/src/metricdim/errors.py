from __future__ import annotations


class MetricDimError(Exception):
    """Base class for every error raised by this package."""


class GraphError(MetricDimError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TrivialGraph(GraphError):
    pass


class SizeOutOfRange(MetricDimError, ValueError):
    pass


class IndexOutOfRange(MetricDimError, IndexError):
    pass


class EqualVertices(MetricDimError, ValueError):
    pass


class OrderOverflow(MetricDimError, ValueError):
    pass


class Infeasible(MetricDimError):
    pass


class Unbounded(MetricDimError):
    pass


class HypothesisViolated(MetricDimError, ValueError):
    """The instance does not satisfy the hypothesis of the statement under test."""


class EdgeListFormatError(MetricDimError, ValueError):
    pass
