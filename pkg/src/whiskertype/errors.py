"""Exception types shared across the package."""


class WhiskerError(ValueError):
    """Base class for validation failures (CLI exit status 1)."""


class NotZeroDimensional(WhiskerError):
    def __init__(self, variable: int):
        self.variable = variable
        super().__init__(f"not zero-dimensional: x{variable}")


class ParseError(WhiskerError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class ScaleError(RuntimeError):
    """Raised when an input exceeds one of the explicit size limits (CLI exit status 2)."""
