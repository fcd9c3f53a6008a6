"""Exception types raised across the package."""


class ModulusMismatch(ValueError):
    """Two field values with different moduli were combined."""


class ZeroInverse(ZeroDivisionError):
    pass


class DenominatorVanishes(ZeroDivisionError):
    pass


class DimensionMismatch(ValueError):
    pass


class Singular(ArithmeticError):
    """Raised when a matrix has determinant zero in the field."""


class CyclicGraph(ValueError):
    pass


class NotBAP(ValueError):
    pass


class NotDAG(ValueError):
    pass


class NodeCountMismatch(ValueError):
    pass


class NTooSmall(ValueError):
    pass


class TooLarge(ValueError):
    pass


class GraphFormatError(ValueError):
    """Base class for graph/constraint file problems; carries a line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(GraphFormatError):
    pass


class UnknownNode(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass
