"""Exception hierarchy shared by all dtdesc modules."""

from __future__ import annotations


class DtdescError(Exception):
    """Base class for every error raised by this package."""


class GraphError(DtdescError):
    pass


class OutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TooLarge(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class InvalidSite(GraphError):
    pass


class ImproperDoubleTriangle(GraphError):
    pass


class WouldCreateMultiEdge(GraphError):
    pass


class BadDegreeSequence(GraphError):
    pass


class NotATriangle(GraphError):
    pass


class NonTerminating(GraphError):
    pass


class NotZigzagPartitionable(GraphError):
    pass


class MixedChains(GraphError):
    pass


class SwapConventionUnsatisfiable(GraphError):
    pass


class ChainVectorError(DtdescError):
    pass


class NegativeEntry(ChainVectorError):
    pass


class ZeroInClosed(ChainVectorError):
    pass


class BudgetExceeded(DtdescError):
    pass


class NotPrime(DtdescError):
    pass


class TooFewVertices(DtdescError):
    pass


class TooManyEdges(DtdescError):
    pass


class NonUnitConstantTerm(DtdescError):
    pass


class UnsupportedLevel(DtdescError):
    pass
