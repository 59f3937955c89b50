class EngineError(Exception):
    """Base class for every error raised by the diagram engine."""


class UnknownNameError(EngineError):
    """An algebra, embedding, form or generator name is not in the catalog."""


class AlgebraError(EngineError):
    """Missing or degenerate algebraic structure (e.g. a singular Frobenius pairing)."""


class TypeMismatchError(EngineError):
    """Source and target objects do not fit together."""


class ConfigurationError(EngineError):
    """Inconsistent category, form or run configuration."""


class ExpressionSyntaxError(EngineError):
    """Raised by the expression parser; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SizeLimitError(EngineError):
    """The requested linear system exceeds the configured number of unknowns."""
