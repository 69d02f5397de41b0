from dataclasses import dataclass
from typing import Optional

from dataclasses_json import dataclass_json

from abel_inversion.constant.abel_constant import (
    EndpointRuleConstant,
    MethodConstant,
    PhantomConstant,
    QprimeSchemeConstant,
    SubcommandConstant,
)
from abel_inversion.constant.solver_constant import SmoothingConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException


@dataclass_json
@dataclass(frozen=True)
class RunConfig:
    """One command-line invocation.

    Attributes:
        subcommand (str): One of SubcommandConstant.CHOICES.
        output_path (str): Result table; metadata goes to <output_path>.json.
        input_path (Optional[str]): Input table, required by every subcommand but synthetic.
        method (str): Direct solver.
        endpoint_rule (str): Completion of the last node.
        qprime_scheme (str): Derivative estimate of the second method.
        alpha (Optional[float]): Fixed regularization parameter.
        delta (Optional[float]): Discrepancy level on the f = q / 2 scale.
        smooth_p (Optional[float]): Spline weight; enables smoothing in tomo.
        resample_n (Optional[int]): Uniform node count after smoothing.
        phantom (str): Phantom kind for synthetic.
        k0 (float): Phantom amplitude.
        radius (float): Phantom radius R.
        noise (float): Relative noise level sigma.
        seed (int): Noise generator seed.
        nodes (Optional[int]): Uniform mesh size for synthetic.
        mesh_path (Optional[str]): Custom mesh table (column x) for synthetic.
        planck_reference (Optional[float]): B(T0) for tomo.
        source_temperature (Optional[float]): T0 in degrees Celsius, metadata only.
        p (float): Spline weight of the smooth subcommand.
        plot (bool): Also write <stem>_plot.csv and <stem>_plot.svg.
    """

    subcommand: str
    output_path: str
    input_path: Optional[str] = None
    method: str = MethodConstant.FIRST
    endpoint_rule: str = EndpointRuleConstant.EXTRAPOLATE_LINEAR
    qprime_scheme: str = QprimeSchemeConstant.FORWARD_DIFFERENCE
    alpha: Optional[float] = None
    delta: Optional[float] = None
    smooth_p: Optional[float] = None
    resample_n: Optional[int] = None
    phantom: str = PhantomConstant.CONSTANT
    k0: float = 1.0
    radius: float = 1.0
    noise: float = 0.0
    seed: int = 0
    nodes: Optional[int] = None
    mesh_path: Optional[str] = None
    planck_reference: Optional[float] = None
    source_temperature: Optional[float] = None
    p: float = SmoothingConstant.DEFAULT_SMOOTHING_PARAMETER
    plot: bool = False

    def __post_init__(self) -> None:
        if self.subcommand not in SubcommandConstant.CHOICES:
            raise InvalidArgumentException(f"Unknown subcommand: {self.subcommand}")
        if not self.output_path:
            raise InvalidArgumentException("An output path is required")
        if self.subcommand == SubcommandConstant.SYNTHETIC:
            if (self.nodes is None) == (self.mesh_path is None):
                raise InvalidArgumentException("synthetic needs exactly one of --nodes and --mesh")
        elif not self.input_path:
            raise InvalidArgumentException(f"{self.subcommand} needs an input table")
        if self.subcommand == SubcommandConstant.TOMO and self.planck_reference is None:
            raise InvalidArgumentException("tomo needs --planck-reference")
        if self.subcommand == SubcommandConstant.REGULARIZE and self.alpha is None and self.delta is None:
            raise InvalidArgumentException("regularize needs --delta or --alpha")
        if self.noise < 0.0:
            raise InvalidArgumentException(f"Noise level must be nonnegative, got {self.noise}")
        if self.seed < 0:
            raise InvalidArgumentException(f"Seed must be nonnegative, got {self.seed}")
