from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.custom_exception import CustomException


class ParseException(CustomException):
    """Exception raised for malformed table files.

    Ragged rows, non-numeric cells, NaN or infinite values and missing
    required columns all end up here. The message names the file and,
    where it applies, the 1-based line number.
    """

    def __init__(self, message: str) -> None:
        """Initialize the ParseException.

        Args:
            message (str): A descriptive message naming the file and line.
        """
        super().__init__(message, ExitCodeConstant.PARSE_ERROR)
