from dataclasses import dataclass

from dataclasses_json import dataclass_json

from abel_inversion.constant.abel_constant import PhantomConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


@dataclass_json
@dataclass(frozen=True)
class Phantom:
    """Synthetic absorption profile with closed-form k(r) and q(x)."""

    kind: str
    k0: float = 1.0
    radius: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in PhantomConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown phantom kind: {self.kind}")
        if self.radius <= 0.0:
            raise InvalidArgumentException(f"Phantom radius must be positive, got {self.radius}")
