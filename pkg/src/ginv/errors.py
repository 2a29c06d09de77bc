"""Exception hierarchy shared by every module of the package."""


class GinvError(Exception):
    """Base class for all errors raised by ginv."""


class FieldMismatch(GinvError, ValueError):
    pass


class DivisionByZero(GinvError, ZeroDivisionError):
    pass


class DimensionMismatch(GinvError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotIdempotent(GinvError, ValueError):
    pass


class InverseMissing(GinvError):
    """A predicate needed an inverse that does not exist.

    ``inverse`` is the kind name (``"core"``, ``"group"``, ...) and ``operand``
    names the argument it was required for (``"a"`` or ``"b"``).
    """

    def __init__(self, inverse: str, operand: str = "a"):
        self.inverse = inverse
        self.operand = operand
        super().__init__(f"{inverse} inverse of {operand} does not exist")


class PreconditionUnmet(GinvError):
    pass


class UnknownTheorem(GinvError, KeyError):
    def __str__(self):
        return f"unknown theorem id: {self.args[0]!r}"


class VerificationError(GinvError, AssertionError):
    """A constructed inverse failed its own defining equations (a bug)."""


class MatrixParseError(GinvError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")
