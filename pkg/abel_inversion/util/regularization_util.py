import logging
import math
from typing import Tuple, Union

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from abel_inversion.constant.abel_constant import AlphaStatusConstant, EndpointRuleConstant, KernelKindConstant
from abel_inversion.constant.solver_constant import RegularizationConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.quadrature_matrix import QuadratureMatrix
from abel_inversion.model.regularization_config import RegularizationConfig, RegularizationResult
from abel_inversion.model.samples import SolutionVector, SourceSamples
from abel_inversion.util.common_util import CommonUtil
from abel_inversion.util.direct_solver_util import DirectSolverUtil
from abel_inversion.util.quadrature_util import QuadratureUtil

logger = logging.getLogger(__name__)

MatrixLike = Union[QuadratureMatrix, np.ndarray]


class RegularizationUtil:
    """Zeroth-order Tikhonov regularization k_alpha = (alpha E + A^T A)^-1 A^T f.

    alpha is either fixed by the caller or chosen by the discrepancy
    principle ||A k_alpha - f||_2 = delta, searched by bisection on log10(alpha).
    The residual is nondecreasing in alpha, which keeps the bisection valid.
    """

    @staticmethod
    def tikhonov_solve(A: MatrixLike, f: np.ndarray, alpha: float) -> np.ndarray:
        """Solve the normal equations (alpha I + A^T A) k = A^T f by Cholesky factorization.

        Args:
            A: Square coefficient matrix
            f: Right-hand side, f = q / 2 on the first n - 1 nodes
            alpha: Regularization parameter, positive

        Returns:
            np.ndarray: Regularized solution on the first n - 1 nodes

        Raises:
            InvalidArgumentException: If alpha <= 0 or shapes do not conform
        """
        matrix, rhs = RegularizationUtil._conform(A, f)
        RegularizationUtil._check_alpha(alpha)
        return RegularizationUtil._solve_normal(matrix.T @ matrix, matrix.T @ rhs, alpha)

    @staticmethod
    def residual_norm(A: MatrixLike, k: np.ndarray, f: np.ndarray) -> float:
        """Euclidean norm of A k - f.

        Raises:
            InvalidArgumentException: If shapes do not conform
        """
        matrix, rhs = RegularizationUtil._conform(A, f)
        solution = CommonUtil.require_length(k, matrix.shape[1], "Solution vector")
        return float(np.linalg.norm(matrix @ solution - rhs))

    @staticmethod
    def choose_alpha(A: MatrixLike, f: np.ndarray, cfg: RegularizationConfig) -> RegularizationResult:
        """Pick alpha so that the residual norm matches cfg.delta.

        Args:
            A: Square coefficient matrix
            f: Right-hand side
            cfg: Discrepancy level, bracket and tolerance

        Returns:
            RegularizationResult: alpha with status matched, delta-unreachable-low,
                delta-unreachable-high or max-iterations

        Raises:
            InvalidArgumentException: If cfg.delta <= 0
        """
        if cfg.delta <= 0.0:
            raise InvalidArgumentException(f"Discrepancy level must be positive, got {cfg.delta}")
        matrix, rhs = RegularizationUtil._conform(A, f)
        gram = matrix.T @ matrix
        projected = matrix.T @ rhs
        delta = cfg.delta

        def residual_at(alpha: float) -> float:
            solution = RegularizationUtil._solve_normal(gram, projected, alpha)
            return float(np.linalg.norm(matrix @ solution - rhs))

        def matched(residual: float) -> bool:
            return abs(residual - delta) <= cfg.rel_tol * delta

        low_residual = residual_at(cfg.alpha_min)
        if matched(low_residual):
            return RegularizationResult(cfg.alpha_min, AlphaStatusConstant.MATCHED, low_residual, 0)
        if delta < low_residual:
            logger.warning(f"delta = {delta:.6g} is below the residual {low_residual:.6g} at alpha_min")
            return RegularizationResult(cfg.alpha_min, AlphaStatusConstant.UNREACHABLE_LOW, low_residual, 0)

        high_residual = residual_at(cfg.alpha_max)
        if matched(high_residual):
            return RegularizationResult(cfg.alpha_max, AlphaStatusConstant.MATCHED, high_residual, 0)
        if delta > high_residual:
            logger.warning(f"delta = {delta:.6g} is above the residual {high_residual:.6g} at alpha_max")
            return RegularizationResult(cfg.alpha_max, AlphaStatusConstant.UNREACHABLE_HIGH, high_residual, 0)

        lower, upper = math.log10(cfg.alpha_min), math.log10(cfg.alpha_max)
        alpha, residual = cfg.alpha_min, low_residual
        for iteration in range(1, RegularizationConstant.MAX_BISECTION_ITERATIONS + 1):
            middle = 0.5 * (lower + upper)
            alpha = 10.0 ** middle
            residual = residual_at(alpha)
            if matched(residual):
                logger.info(f"Discrepancy matched: alpha = {alpha:.6g} after {iteration} iterations")
                return RegularizationResult(alpha, AlphaStatusConstant.MATCHED, residual, iteration)
            if residual < delta:
                lower = middle
            else:
                upper = middle

        logger.warning(f"Bisection stopped at alpha = {alpha:.6g} without matching delta = {delta:.6g}")
        return RegularizationResult(
            alpha, AlphaStatusConstant.MAX_ITERATIONS, residual, RegularizationConstant.MAX_BISECTION_ITERATIONS
        )

    @staticmethod
    def regularized_solution(
        mesh: Mesh,
        q: SourceSamples,
        cfg: RegularizationConfig,
        endpoint_rule: str = EndpointRuleConstant.EXTRAPOLATE_LINEAR,
    ) -> Tuple[SolutionVector, RegularizationResult]:
        """Tikhonov solution of the first-method system on a mesh.

        alpha_override wins over the discrepancy search; the endpoint is
        completed like the unregularized solvers do.
        """
        source = CommonUtil.require_length(q.values, mesh.size, "Source samples")
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL).entries
        rhs = 0.5 * source[:-1]

        if cfg.alpha_override is not None:
            determined = RegularizationUtil.tikhonov_solve(matrix, rhs, cfg.alpha_override)
            result = RegularizationResult(
                cfg.alpha_override,
                AlphaStatusConstant.OVERRIDE,
                RegularizationUtil.residual_norm(matrix, determined, rhs),
                0,
            )
        else:
            result = RegularizationUtil.choose_alpha(matrix, rhs, cfg)
            determined = RegularizationUtil.tikhonov_solve(matrix, rhs, result.alpha)

        values = DirectSolverUtil.complete_endpoint(mesh, determined, endpoint_rule)
        return SolutionVector(values, endpoint_rule), result

    @staticmethod
    def _solve_normal(gram: np.ndarray, projected: np.ndarray, alpha: float) -> np.ndarray:
        system = gram + alpha * np.eye(gram.shape[0])
        return cho_solve(cho_factor(system, lower=False), projected)

    @staticmethod
    def _check_alpha(alpha: float) -> None:
        if not (np.isfinite(alpha) and alpha > 0.0):
            raise InvalidArgumentException(f"alpha must be positive, got {alpha}")

    @staticmethod
    def _conform(A: MatrixLike, f: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        matrix = np.asarray(A.entries if isinstance(A, QuadratureMatrix) else A, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidArgumentException(f"Coefficient matrix must be square, got shape {matrix.shape}")
        return matrix, CommonUtil.require_length(f, matrix.shape[0], "Right-hand side")
