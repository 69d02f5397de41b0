from abel_inversion.constant.abel_constant import ExitCodeConstant


class CustomException(Exception):
    """Base exception class carrying the process exit code of its error kind.

    Every error raised by the solver modules derives from this class so the
    command dispatcher can map it to a distinct exit status without knowing
    the concrete type.

    Attributes:
        exit_code (int): Exit status reported by the command line front end.
    """

    def __init__(self, message: str, exit_code: int = ExitCodeConstant.INTERNAL_ERROR) -> None:
        """Initialize the CustomException with its exit code.

        Args:
            message (str): A descriptive message explaining the error.
            exit_code (int, optional): Exit status for this error. Defaults to the internal error code.
        """
        super().__init__(message)
        self.exit_code = exit_code

    def __str__(self) -> str:
        """Return the error message.

        Returns:
            str: The message the exception was raised with.
        """
        return self.args[0]
