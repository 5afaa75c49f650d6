"""Exception hierarchy.

Two families matter to callers: :class:`PreconditionError` (bad arguments or a
table that cannot support the request) and :class:`ZeroFileError` (anything
that goes wrong reading or writing zero files). The CLI maps them to exit
codes 2 and 3.
"""


class ZetalineError(Exception):
    pass


class PreconditionError(ZetalineError, ValueError):
    pass


class InvalidBracket(PreconditionError):
    pass


class UnresolvedInterval(ZetalineError, RuntimeError):
    pass


class IncompleteTable(PreconditionError):
    pass


class StepTooCoarse(PreconditionError):
    pass


class OutOfWindow(PreconditionError):
    """A parameter lies outside the range where the formula is stated."""


class DegenerateGrid(PreconditionError):
    pass


class ZeroFileError(ZetalineError):
    pass


class ParseError(ZeroFileError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NonMonotoneInput(ParseError):
    pass


class ChecksumMismatch(ZeroFileError):
    pass
