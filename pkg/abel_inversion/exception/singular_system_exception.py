from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.custom_exception import CustomException


class SingularSystemException(CustomException):
    """Exception raised when a triangular system has a zero on its diagonal."""

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitCodeConstant.SINGULAR_SYSTEM)
