import logging

import numpy as np

from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException

logger = logging.getLogger(__name__)


class CommonUtil:
    @staticmethod
    def require_length(values: np.ndarray, length: int, name: str) -> np.ndarray:
        """Return values as a float vector, checking it has the expected length.

        Args:
            values: Sequence or array to check
            length: Required number of entries
            name: Name used in the error message

        Returns:
            np.ndarray: One-dimensional float array

        Raises:
            InvalidArgumentException: If the shape does not match
        """
        vector = np.asarray(values, dtype=float)
        if vector.ndim != 1 or vector.size != length:
            raise InvalidArgumentException(
                f"{name} must have {length} values, got shape {vector.shape}"
            )
        return vector
