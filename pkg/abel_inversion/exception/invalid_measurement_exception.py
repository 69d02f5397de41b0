from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


class InvalidMeasurementException(InvalidArgumentException):
    """Exception raised for intensities or Planck references that cannot be log-converted."""

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitCodeConstant.INVALID_MEASUREMENT)
