from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.custom_exception import CustomException


class OracleFailureException(CustomException):
    """Exception raised when adaptive quadrature misses its tolerance within the subdivision budget."""

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitCodeConstant.ORACLE_FAILURE)
