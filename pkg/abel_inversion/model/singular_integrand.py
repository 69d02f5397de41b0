from dataclasses import dataclass

from abel_inversion.constant.abel_constant import IntegrandConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


@dataclass(frozen=True)
class SingularIntegrand:
    """One of the three weakly singular integrands the closed forms replace.

    sqrt:   r / sqrt(r^2 - c^2)                  (integration variable r, c = x)
    log:    1 / sqrt(x^2 - c^2)                  (integration variable x, c = r)
    moment: r (r - anchor) / sqrt(r^2 - c^2)     (integration variable r, c = x)

    Attributes:
        kind (str): One of IntegrandConstant.CHOICES.
        singular_point (float): c, where the root vanishes.
        anchor (float): Left interval node of the moment integrand.
    """

    kind: str
    singular_point: float
    anchor: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in IntegrandConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown integrand kind: {self.kind}")
        if self.singular_point < 0.0:
            raise InvalidArgumentException(f"Singular point must be nonnegative, got {self.singular_point}")
