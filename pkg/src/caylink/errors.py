"""Exception types shared across the package.

Domain errors (bad geometry, unsupported structure) derive from LinkageError so
callers can distinguish them from parse errors when mapping to exit codes or
HTTP statuses.
"""


class LinkageError(Exception):
    """Base class for domain-level failures."""


class ParseError(Exception):
    """Raised when a linkage document cannot be parsed or validated."""

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context or {}


class NotBaseNonEdge(LinkageError):
    """The requested base pair is an edge, or adding it does not make the graph
    tree-decomposable."""


class NotOneDof(LinkageError):
    """The graph is already rigid, so there is no one-parameter family."""


class NotOnePath(LinkageError):
    """The construction has more than one last-level vertex besides the base."""


class TriangleViolation(LinkageError):
    """A step's two bar lengths cannot meet across the current base distance."""

    def __init__(self, step, vertex, base_distance, r1, r2):
        self.step = step
        self.vertex = vertex
        self.base_distance = base_distance
        self.r1 = r1
        self.r2 = r2
        super().__init__(
            "step %d (vertex %s): base distance %.12g outside [%.12g, %.12g]"
            % (step, vertex, base_distance, abs(r1 - r2), r1 + r2)
        )


class DegenerateBase(LinkageError):
    """Base points coincide; the local frame is undefined."""


class Unrealizable(LinkageError):
    """No realization exists for the requested data."""


class NotSupported(LinkageError):
    """Structure outside the supported class (e.g. extreme graph not
    tree-decomposable)."""


class FourCycleNotFound(LinkageError):
    """No four-cycle of clusters relates two consecutive base pairs."""


class AmbiguousEndpoint(LinkageError):
    """More than one orientation entry vanishes at an interval endpoint."""


class TypeMismatch(LinkageError):
    """Two realizations do not share the required realization type."""


class BudgetExceeded(LinkageError):
    """An enumeration would exceed the configured work cap."""


class DomainError(LinkageError):
    """Scalar operation outside its mathematical domain."""
