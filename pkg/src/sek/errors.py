"""Exception types shared across the package."""


class SekError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class GraphFormatError(SekError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class InvalidVertex(SekError, ValueError):
    pass


class EdgeNotFound(SekError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidParameters(SekError, ValueError):
    pass


class PreconditionError(SekError):
    pass


class BudgetExceeded(SekError):
    """A search exhausted its node budget before reaching a verdict."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


class SizeLimitExceeded(SekError):
    pass


class InvariantViolation(SekError, AssertionError):
    """Raised when a step that cannot fail by construction does fail.

    Seeing this means there is a bug; it carries whatever trace the caller had.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace
