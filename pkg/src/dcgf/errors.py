"""Exception hierarchy shared by every module."""


class DCGFError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpecError(DCGFError, ValueError):
    """A family specification violates one of its parameter constraints."""


class NonUnitDenominatorError(DCGFError, ValueError):
    """A rational function cannot be expanded over the integers."""


class UncoveredIndexError(DCGFError, LookupError):
    """A recurrence has no rule or base value for some index."""

    def __init__(self, index):
        super().__init__(f"no base value or rule covers index {index}")
        self.index = index


class DSLSyntaxError(DCGFError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DSLEvaluationError(DCGFError, ValueError):
    """An expression parsed fine but is not of elementary divide-and-conquer shape."""


class BFileError(DCGFError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SampleTooShortError(DCGFError, ValueError):
    pass
