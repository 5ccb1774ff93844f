"""Exception types shared across the package."""


class StructureError(ValueError):
    """An invariant of a structure or operation precondition is violated."""


class ParseError(ValueError):
    """Malformed input text; carries 1-based line/column of the offender."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + where)


class UnrealizableError(StructureError):
    """A (permutation, bracket sequence) pair realized by no degree-<=1 graph."""


class FeasibilityError(RuntimeError):
    """Requested size exceeds the configured brute-force bound; pass force=True."""
