from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


class OutOfRangeException(InvalidArgumentException):
    """Exception raised when a point lies outside the span a function is defined on.

    Raised for spline evaluation beyond the knot span and for phantom
    evaluation outside [0, R]. No extrapolation is ever attempted.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitCodeConstant.OUT_OF_RANGE)
