from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.custom_exception import CustomException


class InvalidArgumentException(CustomException):
    """Exception raised when an operation receives arguments outside its preconditions.

    Covers wrong vector lengths, nonpositive sizes or radii, negative noise
    levels and invalid regularization settings. More specific argument
    errors (meshes, measurements, ranges) subclass it with their own codes.
    """

    def __init__(self, message: str, exit_code: int = ExitCodeConstant.INVALID_ARGUMENT) -> None:
        """Initialize the InvalidArgumentException.

        Args:
            message (str): A descriptive message explaining the invalid argument.
            exit_code (int, optional): Exit status. Defaults to the invalid-argument code.
        """
        super().__init__(message, exit_code)
