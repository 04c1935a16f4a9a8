"""Exception hierarchy shared by every module of the package."""


class SudokuError(Exception):
    """Base class for all errors raised by gensudoku."""


class ShapeError(SudokuError, ValueError):
    """A cell matrix (or text block) does not have the expected N x N shape."""


class IndexRangeError(SudokuError, ValueError):
    """A row, column, band, stack or symbol index is outside its valid range."""


class PermutationError(SudokuError, ValueError):
    """A supplied permutation is not a bijection on 0..k-1."""


class InvalidSolutionError(SudokuError, ValueError):
    """An operation that needs a complete, violation-free grid got something else."""


class ParseError(SudokuError, ValueError):
    """Malformed grid text. ``line`` is the 1-based source line when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RowShapeError(ParseError, ShapeError):
    pass


class LineCountError(ParseError):
    pass


class UnknownTokenError(ParseError):
    pass


class AlphabetError(ParseError):
    pass
