"""Exception types raised by the toolkit."""

from typing import Any


class ToolkitError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class GraphError(ToolkitError, ValueError):
    """A graph could not be built or failed validation."""


class GraphParseError(GraphError):
    """Malformed graph text; `line` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        self.detail = message
        super().__init__(f"line {line}: {message}" if line else message)

    def __reduce__(self):
        return type(self), (self.detail, self.line)


class NotCubicError(GraphError):
    """A cubic-only operation received a graph with some degree != 3."""


class PreconditionError(ToolkitError, ValueError):
    """An operation was called with arguments outside its contract."""


class CapExceededError(ToolkitError):
    """An exhaustive operation was asked to run beyond its size cap."""

    def __init__(self, operation: str, n: int, cap: int, setting: str, advice: str = ""):
        self.operation = operation
        self.n = n
        self.cap = cap
        self.setting = setting
        self.advice = advice
        message = f"{operation}: n={n} exceeds cap {cap} (raise {setting} to allow it)"
        if advice:
            message += f"; {advice}"
        super().__init__(message)

    def __reduce__(self):
        return type(self), (self.operation, self.n, self.cap, self.setting, self.advice)


class ClassificationViolation(ToolkitError):
    """
    The alternating-cycle structure of an uncolored edge was not found where
    a maximum coloring guarantees it, or an extension step made no progress.

    `trace` is a JSON-serializable record of the state at the failure.
    """

    def __init__(self, message: str, trace: dict[str, Any] | None = None):
        self.trace = trace or {}
        super().__init__(message)

    def __reduce__(self):
        return type(self), (str(self), self.trace)
