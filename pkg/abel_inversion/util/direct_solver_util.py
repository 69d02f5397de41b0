import logging
import math

import numpy as np
from scipy.linalg import solve_triangular

from abel_inversion.constant.abel_constant import EndpointRuleConstant, KernelKindConstant, QprimeSchemeConstant
from abel_inversion.constant.solver_constant import SmoothingConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.exception.singular_system_exception import SingularSystemException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.samples import DerivativeSamples, SolutionVector, SourceSamples
from abel_inversion.util.common_util import CommonUtil
from abel_inversion.util.quadrature_util import QuadratureUtil
from abel_inversion.util.smoothing_util import SmoothingUtil

logger = logging.getLogger(__name__)


class DirectSolverUtil:
    """Unregularized solvers of the Abel equation on a node mesh.

    The first method back-substitutes the triangular system of sqrt-kernel
    coefficients. The second method evaluates the inversion formula with
    log-kernel coefficients and a sampled derivative of the source.
    """

    @staticmethod
    def solve_first(
        mesh: Mesh,
        q: SourceSamples,
        endpoint_rule: str = EndpointRuleConstant.EXTRAPOLATE_LINEAR,
    ) -> SolutionVector:
        """Solve sum_{j>=i} p_ij k_j = q_i / 2 for k_1..k_{n-1} and complete k_n.

        Args:
            mesh: Node grid
            q: Source samples, one per node; the value at x = R is ignored
            endpoint_rule: How k_n is completed

        Returns:
            SolutionVector: Absorption coefficient at every node

        Raises:
            InvalidArgumentException: On a length mismatch
            SingularSystemException: If a diagonal coefficient is zero
        """
        source = CommonUtil.require_length(q.values, mesh.size, "Source samples")
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL).entries
        diagonal = np.diag(matrix)
        if np.any(diagonal <= 0.0):
            raise SingularSystemException(
                f"Zero diagonal coefficient at row {int(np.argmax(diagonal <= 0.0))}"
            )
        determined = solve_triangular(matrix, 0.5 * source[:-1], lower=False, check_finite=True)
        values = DirectSolverUtil.complete_endpoint(mesh, determined, endpoint_rule)
        logger.info(f"First method solved {mesh.size} nodes, endpoint rule {endpoint_rule}")
        return SolutionVector(values, endpoint_rule)

    @staticmethod
    def solve_second(
        mesh: Mesh,
        q: SourceSamples,
        qprime: DerivativeSamples,
        endpoint_rule: str = EndpointRuleConstant.EXTRAPOLATE_LINEAR,
    ) -> SolutionVector:
        """Evaluate k_j = -(1/pi) sum_{i>=j} g_ij q'_i on the interior nodes.

        k_1 falls back to the first method's x = 0 row because g_11 q'_1 is
        the indeterminate product infinity times zero.

        Args:
            mesh: Node grid
            q: Source samples (only q_1 is used, by the fallback)
            qprime: Derivative samples, one per node; the last is ignored
            endpoint_rule: How k_n is completed

        Returns:
            SolutionVector: Absorption coefficient at every node
        """
        source = CommonUtil.require_length(q.values, mesh.size, "Source samples")
        derivative = CommonUtil.require_length(qprime.values, mesh.size, "Derivative samples")
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.LOG_KERNEL, skip_degenerate=True).entries
        nodes = mesh.nodes

        determined = np.empty(mesh.size - 1)
        determined[1:] = -(matrix @ derivative[:-1])[1:] / math.pi
        steps = np.diff(nodes)[1:]
        determined[0] = (0.5 * source[0] - float(np.dot(steps, determined[1:]))) / nodes[1]

        values = DirectSolverUtil.complete_endpoint(mesh, determined, endpoint_rule)
        logger.info(f"Second method solved {mesh.size} nodes, endpoint rule {endpoint_rule}")
        return SolutionVector(values, endpoint_rule)

    @staticmethod
    def estimate_qprime(
        mesh: Mesh,
        q: SourceSamples,
        scheme: str = QprimeSchemeConstant.FORWARD_DIFFERENCE,
        smoothing_parameter: float = SmoothingConstant.DEFAULT_SMOOTHING_PARAMETER,
    ) -> DerivativeSamples:
        """Sample q'(x) at the nodes.

        Args:
            mesh: Node grid
            q: Source samples
            scheme: Forward difference (last slope repeated) or smoothing-spline derivative
            smoothing_parameter: Spline weight p, used by the spline scheme only

        Returns:
            DerivativeSamples: One slope per node
        """
        source = CommonUtil.require_length(q.values, mesh.size, "Source samples")
        if scheme == QprimeSchemeConstant.FORWARD_DIFFERENCE:
            slopes = np.diff(source) / mesh.steps
            return DerivativeSamples(np.append(slopes, slopes[-1]))
        if scheme == QprimeSchemeConstant.SPLINE_DERIVATIVE:
            spline = SmoothingUtil.fit_spline(mesh.nodes, source, smoothing_parameter)
            return DerivativeSamples(SmoothingUtil.eval_spline_deriv(spline, mesh.nodes))
        raise InvalidArgumentException(f"Unknown derivative scheme: {scheme}")

    @staticmethod
    def complete_endpoint(mesh: Mesh, determined: np.ndarray, endpoint_rule: str) -> np.ndarray:
        """Append k_n to the n - 1 values fixed by the triangular system.

        ExtrapolateLinear continues the line through the last two determined
        nodes; Zero and CopyPrevious are the physical alternatives.
        """
        determined = CommonUtil.require_length(determined, mesh.size - 1, "Determined values")
        if endpoint_rule == EndpointRuleConstant.EXTRAPOLATE_LINEAR:
            r = mesh.nodes
            ratio = (r[-1] - r[-3]) / (r[-2] - r[-3])
            last = determined[-2] + ratio * (determined[-1] - determined[-2])
        elif endpoint_rule == EndpointRuleConstant.ZERO:
            last = 0.0
        elif endpoint_rule == EndpointRuleConstant.COPY_PREVIOUS:
            last = determined[-1]
        else:
            raise InvalidArgumentException(f"Unknown endpoint rule: {endpoint_rule}")
        return np.append(determined, last)
