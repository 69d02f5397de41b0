from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


class InvalidMeshException(InvalidArgumentException):
    """Exception raised when a node list does not form a valid mesh.

    A valid mesh starts at 0, is strictly increasing and has at least three
    nodes. Duplicate nodes are rejected outright rather than merged.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitCodeConstant.INVALID_MESH)
