"""Exception hierarchy shared by every module.

The CLI maps each class to a fixed exit code, so callers that script the
library can rely on the same split.
"""

from __future__ import annotations


class DynamoError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(DynamoError, ValueError):
    """Text input does not follow the graph / vertex-set / map file format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(DynamoError, ValueError):
    """Input is well-formed but violates an operation's precondition.

    Typical causes: a zero-indegree vertex in a coloring network, an isolated
    vertex in a reduction source, a disconnected graph where connectivity is
    required.
    """


class CertificateError(DynamoError, ValueError):
    """A claimed witness (dominating set or dynamo) fails verification."""


class OracleLimitError(PreconditionError):
    """Instance exceeds the exhaustive oracle's hard size cap."""


class InvariantError(DynamoError, RuntimeError):
    """An internal invariant that the algorithms guarantee was violated.

    Seeing one of these means a bug, never bad input.
    """
