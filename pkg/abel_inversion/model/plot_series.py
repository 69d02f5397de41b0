from dataclasses import dataclass

import numpy as np

from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


@dataclass(frozen=True, eq=False)
class PlotSeries:
    """One named curve of a plot-data file."""

    name: str
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.ndim != 1 or x.shape != y.shape:
            raise InvalidArgumentException(f"Series {self.name!r} is not conformable: x {x.shape}, y {y.shape}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
