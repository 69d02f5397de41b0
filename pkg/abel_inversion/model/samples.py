from dataclasses import dataclass
from typing import Optional

import numpy as np

from abel_inversion.constant.abel_constant import EndpointRuleConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


def _frozen_vector(values: np.ndarray, name: str) -> np.ndarray:
    vector = np.array(values, dtype=float)
    if vector.ndim != 1:
        raise InvalidArgumentException(f"{name} must be one-dimensional, got shape {vector.shape}")
    vector.setflags(write=False)
    return vector


@dataclass(frozen=True, eq=False)
class SolutionVector:
    """Discrete absorption coefficient k_j, one value per mesh node (1/length).

    The last value is not determined by the triangular system; endpoint_rule
    records how it was completed.
    """

    values: np.ndarray
    endpoint_rule: str = EndpointRuleConstant.EXTRAPOLATE_LINEAR

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen_vector(self.values, "Solution values"))
        if self.endpoint_rule not in EndpointRuleConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown endpoint rule: {self.endpoint_rule}")

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class SourceSamples:
    """Dimensionless right-hand side q_i with optional per-node measurement errors delta_i."""

    values: np.ndarray
    noise_levels: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen_vector(self.values, "Source values"))
        if self.noise_levels is not None:
            levels = _frozen_vector(self.noise_levels, "Noise levels")
            if levels.size != self.values.size:
                raise InvalidArgumentException(
                    f"Noise levels length {levels.size} does not match source length {self.values.size}"
                )
            if np.any(levels < 0.0):
                raise InvalidArgumentException("Noise levels must be nonnegative")
            object.__setattr__(self, "noise_levels", levels)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class DerivativeSamples:
    """Samples q'_i of the source derivative, held constant on [x_i, x_{i+1})."""

    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen_vector(self.values, "Derivative values"))

    def __len__(self) -> int:
        return int(self.values.size)
