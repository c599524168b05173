"""Exception hierarchy shared by every tropalg module."""


class TropalgError(Exception):
    """Base class for library errors."""


class KindMismatch(TropalgError):
    pass


class SizeMismatch(TropalgError):
    pass


class BadArity(TropalgError):
    pass


class NotInvertible(TropalgError):
    pass


class Singular(TropalgError):
    pass


class Divergent(TropalgError):
    pass


class TooLarge(TropalgError):
    pass


class NotThin(TropalgError):
    pass


class LengthMismatch(TropalgError):
    pass


class InternalInvariantViolation(TropalgError):
    pass


class ParseError(TropalgError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
