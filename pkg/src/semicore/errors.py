"""Exception types raised across the package."""


class SemicoreError(Exception):
    """Base class for all package-specific errors."""


class GraphError(SemicoreError):
    """Invalid graph construction input."""


class LoopArc(GraphError):
    """An arc from a vertex to itself was supplied."""


class DuplicateArc(GraphError):
    """The same ordered pair was supplied twice."""


class VertexOutOfRange(GraphError):
    """A vertex label falls outside 0..n-1."""


class EmptyGraph(SemicoreError):
    """Operation needs at least one vertex."""


class DegreeTooLarge(SemicoreError):
    """Requested outdegree exceeds n-1."""


class ParseError(SemicoreError):
    """Malformed edge-list text. Carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TraceMismatch(SemicoreError):
    """Peel trace does not belong to the given graph."""


class TooLarge(SemicoreError):
    """Instance exceeds the exhaustive-search size limit."""


class TooFewVertices(SemicoreError):
    """Requested tournament order is below the construction minimum."""


class InternalBudgetError(SemicoreError):
    """Arc budget bookkeeping broke inside the tournament construction."""


class DomainError(SemicoreError):
    """Numeric argument outside the function's domain."""


class ConvergenceError(SemicoreError):
    """Root bracketing or bisection failed."""
