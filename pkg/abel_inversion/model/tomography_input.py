from dataclasses import dataclass
from typing import Optional

import numpy as np

from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


@dataclass(frozen=True, eq=False)
class TomographyInput:
    """Measured ray intensities and the source reference they are normalized by.

    Attributes:
        intensities (np.ndarray): I_m per mesh node, detector units.
        planck_reference (float): B(T0) in the same units.
        source_temperature (Optional[float]): T0 in degrees Celsius, carried as metadata.
        noise_levels (Optional[np.ndarray]): Known errors of q = -ln(I / B) per node.
    """

    intensities: np.ndarray
    planck_reference: float
    source_temperature: Optional[float] = None
    noise_levels: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        intensities = np.array(self.intensities, dtype=float)
        intensities.setflags(write=False)
        object.__setattr__(self, "intensities", intensities)
        if self.noise_levels is not None:
            levels = np.array(self.noise_levels, dtype=float)
            if levels.shape != intensities.shape or np.any(levels < 0.0):
                raise InvalidArgumentException("Noise levels must be nonnegative and match the intensities")
            levels.setflags(write=False)
            object.__setattr__(self, "noise_levels", levels)
