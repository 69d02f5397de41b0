from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.custom_exception import CustomException


class TableNotFoundException(CustomException):
    """Exception raised when an input table does not exist."""

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitCodeConstant.FILE_NOT_FOUND)
