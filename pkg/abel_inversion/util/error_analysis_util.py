import logging
from typing import Union

import numpy as np
from scipy.linalg import solve_triangular

from abel_inversion.constant.abel_constant import KernelKindConstant
from abel_inversion.exception.domain_exception import DomainException
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.error_estimate import ErrorEstimate
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.samples import SolutionVector
from abel_inversion.util.common_util import CommonUtil
from abel_inversion.util.quadrature_util import QuadratureUtil

logger = logging.getLogger(__name__)


class ErrorAnalysisUtil:
    """Signed quadrature errors of the first method.

    Holding k constant on [r_j, r_{j+1}) misses the integral of
    k'(xi_j) r (r - r_j) / sqrt(r^2 - x_i^2), which is available in closed
    form. Collected over a row these misses satisfy the same triangular
    system as the solution, A dk = eps, and dk = k - k_true to leading order.
    """

    @staticmethod
    def delta_eps(x: float, r_lo: float, r_hi: float, kprime: float) -> float:
        """Quadrature error of one interval for slope kprime.

        Args:
            x: Ray offset, 0 <= x <= r_lo
            r_lo: Interval start
            r_hi: Interval end, r_hi > r_lo
            kprime: Slope of k on the interval

        Returns:
            float: (kprime / 2) [(r_hi - 2 r_lo) s_hi + r_lo s_lo + x^2 ln((r_hi + s_hi) / (r_lo + s_lo))]

        Raises:
            DomainException: If x > r_lo
        """
        x, r_lo, r_hi = float(x), float(r_lo), float(r_hi)
        if x < 0.0:
            raise InvalidArgumentException(f"x must be nonnegative, got {x}")
        if x > r_lo:
            raise DomainException(f"x = {x} lies inside the interval [{r_lo}, {r_hi}]")
        if not r_hi > r_lo:
            raise InvalidArgumentException(f"Interval [{r_lo}, {r_hi}] is empty or reversed")
        with np.errstate(invalid="ignore", divide="ignore"):
            value = ErrorAnalysisUtil._delta_eps_values(
                np.float64(x), np.float64(r_lo), np.float64(r_hi), np.float64(kprime)
            )
        return float(value)

    @staticmethod
    def kprime_proxy(mesh: Mesh, k: Union[SolutionVector, np.ndarray]) -> np.ndarray:
        """Forward-difference slope (k_{j+1} - k_j) / (r_{j+1} - r_j) for j = 1..n-1."""
        values = CommonUtil.require_length(
            k.values if isinstance(k, SolutionVector) else k, mesh.size, "Solution vector"
        )
        return np.diff(values) / mesh.steps

    @staticmethod
    def error_recursion(mesh: Mesh, k: Union[SolutionVector, np.ndarray]) -> ErrorEstimate:
        """Signed per-node errors of a first-method solution.

        Args:
            mesh: Node grid
            k: Solution at every node, endpoint included

        Returns:
            ErrorEstimate: Interval errors, row sums, node errors and slopes
        """
        slopes = ErrorAnalysisUtil.kprime_proxy(mesh, k)
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL).entries
        nodes = mesh.nodes

        with np.errstate(invalid="ignore", divide="ignore"):
            interval_errors = ErrorAnalysisUtil._delta_eps_values(
                nodes[:-1, np.newaxis], nodes[np.newaxis, :-1], nodes[np.newaxis, 1:], slopes[np.newaxis, :]
            )
        interval_errors = np.triu(np.where(np.isfinite(interval_errors), interval_errors, 0.0))
        row_sums = interval_errors.sum(axis=1)

        node_errors = np.empty(mesh.size)
        node_errors[:-1] = solve_triangular(matrix, row_sums, lower=False)
        node_errors[-1] = node_errors[-2]
        logger.info(f"Error recursion: max |dk| = {np.max(np.abs(node_errors)):.3e}")
        return ErrorEstimate(
            interval_errors=interval_errors,
            row_sums=row_sums,
            node_errors=node_errors,
            derivative_proxy=slopes,
        )

    @staticmethod
    def refined_solution(k: SolutionVector, err: ErrorEstimate) -> SolutionVector:
        """Subtract the estimated signed error from the computed solution.

        Raises:
            InvalidArgumentException: On a length mismatch
        """
        corrections = CommonUtil.require_length(err.node_errors, len(k), "Node errors")
        return SolutionVector(k.values - corrections, k.endpoint_rule)

    @staticmethod
    def noisy_bounds(mesh: Mesh, err: ErrorEstimate, deltas: np.ndarray) -> np.ndarray:
        """Absolute error bounds including per-node data errors.

        |dk_i| p_ii = |eps_i| + delta_i + sum_{j>i} p_ij |dk_j|, solved backward,
        with the last node repeating the one before it.

        Args:
            mesh: Node grid
            err: Estimate from error_recursion
            deltas: Nonnegative data errors, one per node

        Returns:
            np.ndarray: Nonnegative bounds, one per node

        Raises:
            InvalidArgumentException: If any delta is negative or lengths differ
        """
        levels = CommonUtil.require_length(deltas, mesh.size, "Data errors")
        if np.any(levels < 0.0):
            raise InvalidArgumentException("Data errors must be nonnegative")
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL).entries
        # diagonal kept, off-diagonal terms moved to the right-hand side with a plus sign
        system = 2.0 * np.diag(np.diag(matrix)) - matrix
        bounds = np.empty(mesh.size)
        bounds[:-1] = solve_triangular(system, np.abs(err.row_sums) + levels[:-1], lower=False)
        bounds[-1] = bounds[-2]
        return bounds

    @staticmethod
    def _delta_eps_values(x: np.ndarray, r_lo: np.ndarray, r_hi: np.ndarray, kprime: np.ndarray) -> np.ndarray:
        root_hi = np.sqrt(np.maximum((r_hi - x) * (r_hi + x), 0.0))
        root_lo = np.sqrt(np.maximum((r_lo - x) * (r_lo + x), 0.0))
        log_term = np.where(x == 0.0, 0.0, x * x * QuadratureUtil.log_kernel_values(x, r_lo, r_hi))
        bracket = (r_hi - 2.0 * r_lo) * root_hi + r_lo * root_lo + log_term
        return 0.5 * kprime * bracket
