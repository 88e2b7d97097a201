"""Exception types shared by every solver in the package."""


class SegCoverError(Exception):
    """Base class for all errors raised by segcover."""


class InvalidInstance(SegCoverError):
    """The input violates a solver's geometric precondition."""


class StructuralError(SegCoverError):
    """A cover or LP refers to things that do not exist (bad index, bad shape)."""


class Infeasible(SegCoverError):
    """Some element cannot be covered by any available set/square.

    ``element`` is the index of the offending segment (or point, for the
    restricted point cover), when known.
    """

    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


class TooLarge(SegCoverError):
    """An exact search exhausted its node budget."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class ParseError(SegCoverError):
    """A text file could not be parsed; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
