from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.custom_exception import CustomException


class DomainException(CustomException):
    """Exception raised when a quadrature coefficient is requested across the kernel singularity.

    The closed forms are valid only when the evaluation point does not lie
    inside the integration interval (x <= r_lo for the sqrt kernel,
    r <= x_lo for the log kernel).
    """

    def __init__(self, message: str, exit_code: int = ExitCodeConstant.DOMAIN_ERROR) -> None:
        """Initialize the DomainException.

        Args:
            message (str): A descriptive message naming the offending arguments.
            exit_code (int, optional): Exit status. Defaults to the domain-error code.
        """
        super().__init__(message, exit_code)
