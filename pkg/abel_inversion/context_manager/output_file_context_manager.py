import logging
import os
import tempfile
from typing import IO, Any, Optional, Type

from abel_inversion.constant.solver_constant import TableConstant

logger = logging.getLogger(__name__)


class OutputFileContextManager:
    """Context manager for writing an output file in one piece.

    The content goes to a temporary file next to the target, which replaces
    the target only when the block exits without an exception. A failed
    write never leaves a truncated result behind.
    """

    def __init__(self, path: str, binary: bool = False):
        """Initialize the context manager.

        Args:
            path: Final location of the file
            binary: Open the temporary file in binary mode
        """
        self.path: str = os.fspath(path)
        self.binary: bool = binary
        self.handle: Optional[IO] = None
        self.temp_path: Optional[str] = None

    def __enter__(self) -> IO:
        """Open the temporary file and return its handle.

        Returns:
            IO: Writable handle, text mode with UTF-8 and no newline translation unless binary
        """
        directory = os.path.dirname(os.path.abspath(self.path))
        descriptor, self.temp_path = tempfile.mkstemp(prefix=".abel-", suffix=".tmp", dir=directory)
        if self.binary:
            self.handle = os.fdopen(descriptor, "wb")
        else:
            self.handle = os.fdopen(descriptor, "w", encoding=TableConstant.ENCODING, newline="")
        return self.handle

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc_val: Optional[BaseException],
        exc_tb: Optional[Any],
    ) -> None:
        """Close the handle, then publish or discard the temporary file.

        Args:
            exc_type: Exception type if an error occurred
            exc_val: Exception value if an error occurred
            exc_tb: Exception traceback if an error occurred
        """
        self.handle.close()
        if exc_type is None:
            os.replace(self.temp_path, self.path)
            logger.info(f"Wrote {self.path}")
        else:
            os.remove(self.temp_path)
            logger.error(f"Discarded partial output for {self.path}: {exc_val}")
