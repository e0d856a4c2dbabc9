"""Exception hierarchy shared by every module."""


class QTRSKError(Exception):
    """Base class for all library errors."""


class EqualPoints(QTRSKError):
    pass


class IncomparablePoints(QTRSKError):
    pass


class DivideByZero(QTRSKError, ZeroDivisionError):
    pass


class PoleAtPoint(QTRSKError):
    pass


class LimitDiverges(QTRSKError):
    pass


class JackLimitUndefined(QTRSKError):
    pass


class CellOutsideShape(QTRSKError):
    pass


class NotContained(QTRSKError):
    pass


class IncompatiblePair(QTRSKError):
    pass


class NotHorizontalStrip(QTRSKError):
    pass


class NotVerticalStrip(QTRSKError):
    pass


class NotDecomposable(QTRSKError):
    pass


class ShapeMismatch(QTRSKError):
    pass


class BoundaryMismatch(QTRSKError):
    pass


class ColumnConstraintViolated(QTRSKError):
    pass


class ParameterOutOfRange(QTRSKError):
    pass


class UnknownSuite(QTRSKError):
    pass


class ParseError(QTRSKError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position
