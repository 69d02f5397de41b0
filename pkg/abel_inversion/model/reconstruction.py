from dataclasses import dataclass
from typing import Optional

import numpy as np
from dataclasses_json import dataclass_json

from abel_inversion.constant.abel_constant import EndpointRuleConstant, MethodConstant, QprimeSchemeConstant
from abel_inversion.constant.solver_constant import SmoothingConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.error_estimate import ErrorEstimate
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.regularization_config import RegularizationConfig
from abel_inversion.model.samples import SolutionVector, SourceSamples


@dataclass(frozen=True)
class ReconstructionOptions:
    """Pipeline switches; the defaults run the plain first method.

    Attributes:
        method (str): MethodConstant.FIRST or MethodConstant.SECOND.
        smooth (bool): Fit a smoothing spline to the intensities before conversion.
        smoothing_parameter (float): Spline weight p.
        resample_n (Optional[int]): Node count of the uniform mesh the spline is resampled onto.
        regularization (Optional[RegularizationConfig]): Run the Tikhonov path as well.
        endpoint_rule (str): Completion of the last node.
        qprime_scheme (str): Derivative estimate used by the second method.
    """

    method: str = MethodConstant.FIRST
    smooth: bool = False
    smoothing_parameter: float = SmoothingConstant.DEFAULT_SMOOTHING_PARAMETER
    resample_n: Optional[int] = None
    regularization: Optional[RegularizationConfig] = None
    endpoint_rule: str = EndpointRuleConstant.EXTRAPOLATE_LINEAR
    qprime_scheme: str = QprimeSchemeConstant.FORWARD_DIFFERENCE

    def __post_init__(self) -> None:
        if self.method not in MethodConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown method: {self.method}")
        if self.resample_n is not None and not self.smooth:
            raise InvalidArgumentException("Resampling requires smoothing to be enabled")
        if self.endpoint_rule not in EndpointRuleConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown endpoint rule: {self.endpoint_rule}")
        if self.qprime_scheme not in QprimeSchemeConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown derivative scheme: {self.qprime_scheme}")


@dataclass_json
@dataclass
class ReconstructionDiagnostics:
    """Scalar summary of a reconstruction, written next to the output as JSON."""

    method: str
    mesh_size: int
    residual: float
    smoothing_parameter: Optional[float] = None
    alpha: Optional[float] = None
    alpha_status: Optional[str] = None
    alpha_iterations: Optional[int] = None
    unregularized_residual: Optional[float] = None
    max_node_error: Optional[float] = None
    max_bound: Optional[float] = None


@dataclass(frozen=True, eq=False)
class ReconstructionResult:
    """Everything reconstruct produced.

    solution is the reported profile: the regularized one when the Tikhonov
    path ran, the direct one otherwise. unregularized is always the direct one.
    """

    mesh: Mesh
    source: SourceSamples
    solution: SolutionVector
    unregularized: SolutionVector
    diagnostics: ReconstructionDiagnostics
    error: Optional[ErrorEstimate] = None
    bounds: Optional[np.ndarray] = None
    refined: Optional[SolutionVector] = None
