"""Exception types shared across the package."""


class IdealpowError(Exception):
    """Base class for all errors raised by idealpow."""


class ArityMismatchError(IdealpowError, ValueError):
    """Two monomials or ideals live in different numbers of variables."""

    def __init__(self, msg="incompatible arity"):
        super().__init__(msg)


class ExponentOverflowError(IdealpowError, OverflowError):
    """An exponent left the signed 64-bit range."""


class EmptyGeneratingSetError(IdealpowError, ValueError):
    """The zero ideal is not representable."""

    def __init__(self, msg="empty generating set"):
        super().__init__(msg)


class OracleCapError(IdealpowError, RuntimeError):
    """The brute-force enumeration would exceed the configured cap."""

    def __init__(self, msg="oracle too large"):
        super().__init__(msg)


class ParameterError(IdealpowError, ValueError):
    """A parameter is outside the documented domain."""


class PreconditionError(IdealpowError, ValueError):
    """A stated precondition of an operation is violated."""


class ParseError(IdealpowError, ValueError):
    """An ideal file could not be parsed."""

    def __init__(self, line, column, msg):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {msg}")


class TheoremViolationError(IdealpowError, AssertionError):
    """A statement that is a proven theorem failed; this is a bug."""
