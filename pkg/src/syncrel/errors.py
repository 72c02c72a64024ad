"""Exception hierarchy shared by all modules."""


class SyncrelError(Exception):
    """Base class for every error raised by the package."""


class AlphabetMismatch(SyncrelError):
    pass


class RegexSyntaxError(SyncrelError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UndeclaredLetter(SyncrelError):
    pass


class UnknownState(SyncrelError):
    pass


class NotFiniteShiftlag(SyncrelError):
    pass


class NotFiniteShift(SyncrelError):
    pass


class Incompatible(SyncrelError):
    pass


class LagBoundExceeded(SyncrelError):
    pass


class NotRecognizableOnTarget(SyncrelError):
    pass


class NotSubset(SyncrelError):
    pass


class NotSamePair(SyncrelError):
    pass


class NotPrefixClosed(SyncrelError):
    pass


class AlphabetShapeMismatch(SyncrelError):
    pass


class NotDisjoint(SyncrelError):
    pass


class NotLimited(SyncrelError):
    pass


class Diverged(SyncrelError):
    """An internal iteration bound was hit; this signals a defect, not an answer."""


class NoRecognizableUniformization(SyncrelError):
    pass


class NotFunctionalDecomposition(SyncrelError):
    pass


class Unsupported(SyncrelError):
    pass


class ParseError(SyncrelError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class NotAlternating(SyncrelError):
    """A language expected inside (ΣΓ)* contains a non-alternating word."""
