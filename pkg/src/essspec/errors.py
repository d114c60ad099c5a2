"""Exception types raised across the package."""

from __future__ import annotations


class InvalidArgument(ValueError):
    """A parameter is outside the documented range."""


class NotConnectedError(ValueError):
    """Raised when an operation needs a connected (or strongly connected) input.

    ``partition`` carries the component blocks for undirected inputs;
    ``pair`` carries an ordered pair ``(u, v)`` with no directed u-v path
    for digraphs.
    """

    def __init__(self, message: str, partition=None, pair=None):
        super().__init__(message)
        self.partition = partition
        self.pair = pair


class NonConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap before the enclosure closed."""

    def __init__(self, message: str, lower: float, upper: float, iterations: int):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.iterations = iterations


class UnsupportedError(ValueError):
    """The input is valid but the requested routine does not handle it."""


class ConstructionInfeasible(ValueError):
    """An extremal construction does not have the requested parameters."""


class PreconditionError(ValueError):
    """A check was asked about an input that violates its precondition."""


class ParseError(ValueError):
    """Malformed graph file. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
