"""Exception hierarchy.

The CLI maps each branch to an exit code: parse errors to 1, validation and
consistency failures to 2, numerical failures to 3.
"""


class ShadowedAHPError(Exception):
    """Base class for all library errors."""


class ParseError(ShadowedAHPError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ValidationError(ShadowedAHPError, ValueError):
    """A matrix or problem violates a structural invariant."""


class ConsistencyError(ValidationError):
    def __init__(self, matrix, ratio, threshold):
        self.matrix = matrix
        self.ratio = ratio
        self.threshold = threshold
        super().__init__(
            f"matrix {matrix!r}: consistency ratio {ratio:.4f} >= threshold {threshold}"
        )


class NumericalError(ShadowedAHPError, ArithmeticError):
    """Root finding, quadrature or normalization failed."""


class ConversionError(NumericalError):
    def __init__(self, message, matrix=None, cell=None):
        self.matrix = matrix
        self.cell = cell
        prefix = ""
        if matrix is not None:
            prefix += f"matrix {matrix!r} "
        if cell is not None:
            prefix += f"cell {cell} "
        super().__init__(prefix + message if prefix else message)


class DomainError(NumericalError, ValueError):
    """An SFN operation was applied outside its domain."""
