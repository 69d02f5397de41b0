from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.domain_exception import DomainException


class DegenerateNodeException(DomainException):
    """Exception raised for the log-kernel coefficient at r = x_lo = 0.

    Both the logarithm argument and the derivative sample vanish there, so
    the product is the indeterminate form infinity times zero. The second
    method sidesteps the cell by recovering its first node from the first
    method's row instead.
    """

    def __init__(self, message: str) -> None:
        """Initialize the DegenerateNodeException.

        Args:
            message (str): A descriptive message explaining where the degenerate cell was hit.
        """
        super().__init__(message, ExitCodeConstant.DEGENERATE_NODE)
