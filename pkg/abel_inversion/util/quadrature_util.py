import logging
from typing import Union

import numpy as np

from abel_inversion.constant.abel_constant import KernelKindConstant
from abel_inversion.constant.solver_constant import SolverConstant
from abel_inversion.exception.degenerate_node_exception import DegenerateNodeException
from abel_inversion.exception.domain_exception import DomainException
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.quadrature_matrix import QuadratureMatrix
from abel_inversion.model.samples import SolutionVector, SourceSamples
from abel_inversion.util.common_util import CommonUtil

logger = logging.getLogger(__name__)


class QuadratureUtil:
    """Generalized left-rectangle coefficients for the two Abel singularities.

    The singular kernel is integrated in closed form over every mesh interval
    while the unknown is held constant, so no coefficient ever divides by the
    vanishing root sqrt(r^2 - x^2).
    """

    @staticmethod
    def p_coeff(x: float, r_lo: float, r_hi: float) -> float:
        """Integral of r / sqrt(r^2 - x^2) over [r_lo, r_hi].

        Args:
            x: Ray offset, 0 <= x <= r_lo
            r_lo: Interval start
            r_hi: Interval end, r_hi >= r_lo

        Returns:
            float: sqrt(r_hi^2 - x^2) - sqrt(r_lo^2 - x^2), nonnegative

        Raises:
            DomainException: If x > r_lo
            InvalidArgumentException: If x < 0 or r_hi < r_lo
        """
        x, r_lo, r_hi = float(x), float(r_lo), float(r_hi)
        QuadratureUtil._check_interval("x", x, r_lo, r_hi)
        with np.errstate(invalid="ignore", divide="ignore"):
            return float(QuadratureUtil.sqrt_kernel_values(np.float64(x), np.float64(r_lo), np.float64(r_hi)))

    @staticmethod
    def g_coeff(r: float, x_lo: float, x_hi: float) -> float:
        """Integral of 1 / sqrt(x^2 - r^2) over [x_lo, x_hi].

        Args:
            r: Radius, 0 <= r <= x_lo
            x_lo: Interval start
            x_hi: Interval end, x_hi >= x_lo

        Returns:
            float: ln[(x_hi + sqrt(x_hi^2 - r^2)) / (x_lo + sqrt(x_lo^2 - r^2))], nonnegative

        Raises:
            DomainException: If r > x_lo
            DegenerateNodeException: If r = x_lo = 0
            InvalidArgumentException: If r < 0 or x_hi < x_lo
        """
        r, x_lo, x_hi = float(r), float(x_lo), float(x_hi)
        QuadratureUtil._check_interval("r", r, x_lo, x_hi)
        if r == 0.0 and x_lo == 0.0:
            raise DegenerateNodeException("Log-kernel coefficient is undefined at r = x_lo = 0")
        with np.errstate(invalid="ignore", divide="ignore"):
            return float(QuadratureUtil.log_kernel_values(np.float64(r), np.float64(x_lo), np.float64(x_hi)))

    @staticmethod
    def assemble_matrix(mesh: Mesh, kind: str, skip_degenerate: bool = False) -> QuadratureMatrix:
        """Assemble the upper-triangular coefficient matrix of one kernel.

        SqrtKernel: entries[i][j] = p_coeff(x_i, r_j, r_{j+1}) for j >= i.
        LogKernel: entries[j][i] = g_coeff(r_j, x_i, x_{i+1}) for i >= j.

        Args:
            mesh: Node grid
            kind: KernelKindConstant.SQRT_KERNEL or KernelKindConstant.LOG_KERNEL
            skip_degenerate: Store 0 for the log-kernel cell at r = x_lo = 0 instead of raising

        Returns:
            QuadratureMatrix: Dense (n-1) x (n-1) coefficients

        Raises:
            DegenerateNodeException: For the log kernel unless skip_degenerate is set
            InvalidArgumentException: For an unknown kernel kind
        """
        nodes = mesh.nodes
        first = nodes[:-1, np.newaxis]
        lo = nodes[np.newaxis, :-1]
        hi = nodes[np.newaxis, 1:]

        with np.errstate(invalid="ignore", divide="ignore"):
            if kind == KernelKindConstant.SQRT_KERNEL:
                values = QuadratureUtil.sqrt_kernel_values(first, lo, hi)
            elif kind == KernelKindConstant.LOG_KERNEL:
                if not skip_degenerate:
                    raise DegenerateNodeException(
                        "Log-kernel row r_1 = 0 meets the interval starting at x_1 = 0"
                    )
                values = QuadratureUtil.log_kernel_values(first, lo, hi)
                values[0, 0] = 0.0
                logger.warning("Skipped the degenerate log-kernel cell at r = x_lo = 0")
            else:
                raise InvalidArgumentException(f"Unknown kernel kind: {kind}")

        entries = np.triu(np.where(np.isfinite(values), values, 0.0))
        logger.info(f"Assembled {kind} quadrature matrix of order {entries.shape[0]}")
        return QuadratureMatrix(entries=entries, kind=kind, mesh=mesh)

    @staticmethod
    def forward_apply(mesh: Mesh, k: Union[SolutionVector, np.ndarray]) -> SourceSamples:
        """Apply the discrete Abel operator: q_i = 2 * sum_{j>=i} p_ij k_j, q_n = 0.

        Args:
            mesh: Node grid
            k: One value per node; the last one is not used by the sum

        Returns:
            SourceSamples: Projections at every node

        Raises:
            InvalidArgumentException: On a length mismatch
        """
        values = k.values if isinstance(k, SolutionVector) else k
        values = CommonUtil.require_length(values, mesh.size, "Solution vector")
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL)
        q = np.zeros(mesh.size)
        q[:-1] = 2.0 * (matrix.entries @ values[:-1])
        return SourceSamples(q)

    @staticmethod
    def _check_interval(name: str, point: float, lo: float, hi: float) -> None:
        if point < 0.0:
            raise InvalidArgumentException(f"{name} must be nonnegative, got {point}")
        if point > lo:
            raise DomainException(f"{name} = {point} lies inside the interval [{lo}, {hi}]")
        if hi < lo:
            raise InvalidArgumentException(f"Interval end {hi} precedes its start {lo}")

    @staticmethod
    def sqrt_kernel_values(x: np.ndarray, r_lo: np.ndarray, r_hi: np.ndarray) -> np.ndarray:
        """Vectorized p coefficients; cells with x > r_lo come out as garbage and are masked by callers."""
        root_hi = np.sqrt(np.maximum((r_hi - x) * (r_hi + x), 0.0))
        root_lo = np.sqrt(np.maximum((r_lo - x) * (r_lo + x), 0.0))
        difference = root_hi - root_lo
        # near-equal roots: rewrite the difference as a quotient
        quotient = (r_hi - r_lo) * (r_hi + r_lo) / (root_hi + root_lo)
        close = difference <= SolverConstant.CANCELLATION_RELATIVE_GAP * root_hi
        values = np.where(close, quotient, difference)
        return np.where((root_hi + root_lo) == 0.0, 0.0, values)

    @staticmethod
    def log_kernel_values(r: np.ndarray, x_lo: np.ndarray, x_hi: np.ndarray) -> np.ndarray:
        """Vectorized g coefficients; the cell r = x_lo = 0 comes out infinite."""
        root_hi = np.sqrt(np.maximum((x_hi - r) * (x_hi + r), 0.0))
        root_lo = np.sqrt(np.maximum((x_lo - r) * (x_lo + r), 0.0))
        # ln(A / B) = log1p((A - B) / B) with A - B free of cancellation
        growth = (x_hi - x_lo) * (1.0 + (x_hi + x_lo) / (root_hi + root_lo))
        values = np.log1p(growth / (x_lo + root_lo))
        return np.where(x_hi == x_lo, 0.0, values)
