from dataclasses import dataclass
from typing import Optional

from dataclasses_json import dataclass_json

from abel_inversion.constant.solver_constant import RegularizationConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


@dataclass_json
@dataclass(frozen=True)
class RegularizationConfig:
    """Settings of the Tikhonov path.

    Attributes:
        delta (float): Discrepancy level the residual norm is matched to.
        alpha_min (float): Lower end of the log-bisection bracket.
        alpha_max (float): Upper end of the log-bisection bracket.
        rel_tol (float): Relative tolerance of the residual match.
        alpha_override (Optional[float]): Fixed alpha; skips the discrepancy search when set.
    """

    delta: float = 0.0
    alpha_min: float = RegularizationConstant.DEFAULT_ALPHA_MIN
    alpha_max: float = RegularizationConstant.DEFAULT_ALPHA_MAX
    rel_tol: float = RegularizationConstant.DEFAULT_REL_TOL
    alpha_override: Optional[float] = None

    def __post_init__(self) -> None:
        if self.delta < 0.0:
            raise InvalidArgumentException(f"Discrepancy level must be nonnegative, got {self.delta}")
        if not 0.0 < self.alpha_min < self.alpha_max:
            raise InvalidArgumentException(
                f"Alpha bracket must satisfy 0 < alpha_min < alpha_max, got [{self.alpha_min}, {self.alpha_max}]"
            )
        if not 0.0 < self.rel_tol < 1.0:
            raise InvalidArgumentException(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.alpha_override is not None and self.alpha_override <= 0.0:
            raise InvalidArgumentException(f"alpha_override must be positive, got {self.alpha_override}")


@dataclass_json
@dataclass(frozen=True)
class RegularizationResult:
    """Outcome of an alpha selection."""

    alpha: float
    status: str
    residual: float
    iterations: int = 0
