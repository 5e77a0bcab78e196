"""Exception hierarchy shared by every module."""


class EcIndexError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(EcIndexError, ValueError):
    """Malformed graph construction input (bad vertex, self-loop)."""


class DisconnectedGraphError(EcIndexError, ValueError):
    """A distance-based quantity was requested on a disconnected graph."""

    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"graph is disconnected: vertex {vertex} is unreachable")


class DomainError(EcIndexError, ValueError):
    """Parameters lie outside the domain of an operation."""


class SizeError(DomainError):
    """Input is too large for the built-in exhaustive machinery."""


class UnsupportedFormError(DomainError):
    """No closed-form value is known for the requested family member."""


class HypothesisError(DomainError):
    """A transformation site fails one of the lemma's hypotheses."""


class ParseError(EcIndexError, ValueError):
    """Malformed graph file contents.

    ``location`` names where the problem is, e.g. ``"byte 3"`` or ``"line 7"``.
    """

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
