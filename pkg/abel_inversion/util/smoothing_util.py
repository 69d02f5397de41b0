import logging
from typing import Union

import numpy as np
from scipy import sparse
from scipy.interpolate import PPoly
from scipy.sparse import linalg as spla

from abel_inversion.constant.solver_constant import SmoothingConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.exception.out_of_range_exception import OutOfRangeException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.smoothing_spline import SmoothingSpline

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class SmoothingUtil:
    """Natural cubic smoothing spline.

    The fitted spline s minimizes

        p * sum (y_i - s(x_i))^2 + (1 - p) * integral s''(x)^2 dx

    over natural cubic splines with knots at the data abscissae. With m the
    knot second derivatives and u = m / p the system solved is

        (p R + (1 - p) Q^T Q) u = Q^T y,   a = y - (1 - p) Q u,

    where a are the knot values, R the tridiagonal Gram matrix of the
    second-derivative hat functions and Q^T the second-divided-difference
    operator. p = 1 interpolates, p = 0 collapses to the least-squares line.
    """

    @staticmethod
    def fit_spline(
        x: np.ndarray,
        y: np.ndarray,
        p: float = SmoothingConstant.DEFAULT_SMOOTHING_PARAMETER,
    ) -> SmoothingSpline:
        """Fit the smoothing spline with weight p on the residual term.

        Args:
            x: Strictly increasing abscissae, at least 4
            y: Data values
            p: Smoothing parameter in [0, 1]

        Returns:
            SmoothingSpline: Fitted spline

        Raises:
            InvalidArgumentException: On too few points, nonmonotone x, mismatched
                lengths or p outside [0, 1]
        """
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim != 1 or y.shape != x.shape:
            raise InvalidArgumentException(f"Spline data shapes differ: x {x.shape}, y {y.shape}")
        if x.size < SmoothingConstant.MIN_SPLINE_POINTS:
            raise InvalidArgumentException(
                f"Smoothing spline needs at least {SmoothingConstant.MIN_SPLINE_POINTS} points, got {x.size}"
            )
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise InvalidArgumentException("Spline data must be finite")
        h = np.diff(x)
        if np.any(h <= 0.0):
            raise InvalidArgumentException("Spline abscissae must be strictly increasing")
        if not 0.0 <= p <= 1.0:
            raise InvalidArgumentException(f"Smoothing parameter must lie in [0, 1], got {p}")

        n = x.size
        q_matrix = sparse.diags(
            [1.0 / h[:-1], -1.0 / h[:-1] - 1.0 / h[1:], 1.0 / h[1:]],
            offsets=[0, -1, -2],
            shape=(n, n - 2),
            format="csc",
        )
        r_matrix = sparse.diags(
            [h[1:-1] / 6.0, (h[:-1] + h[1:]) / 3.0, h[1:-1] / 6.0],
            offsets=[-1, 0, 1],
            shape=(n - 2, n - 2),
            format="csc",
        )
        system = (p * r_matrix + (1.0 - p) * (q_matrix.T @ q_matrix)).tocsc()
        u = np.atleast_1d(spla.spsolve(system, q_matrix.T @ y))

        values = y - (1.0 - p) * (q_matrix @ u)
        second = np.zeros(n)
        second[1:-1] = p * u

        coefficients = np.vstack(
            [
                (second[1:] - second[:-1]) / (6.0 * h),
                second[:-1] / 2.0,
                np.diff(values) / h - h * (2.0 * second[:-1] + second[1:]) / 6.0,
                values[:-1],
            ]
        )
        logger.info(f"Fitted smoothing spline on {n} points with p = {p}")
        return SmoothingSpline(
            knots=x.copy(),
            ppoly=PPoly(coefficients, x, extrapolate=True),
            second_derivatives=second,
            smoothing_parameter=float(p),
        )

    @staticmethod
    def eval_spline(spline: SmoothingSpline, x: ArrayLike) -> ArrayLike:
        """Evaluate the spline inside its knot span.

        Raises:
            OutOfRangeException: If any point lies outside the knot span
        """
        points = SmoothingUtil._check_span(spline, x)
        values = spline.ppoly(points)
        return float(values) if np.ndim(x) == 0 else values

    @staticmethod
    def eval_spline_deriv(spline: SmoothingSpline, x: ArrayLike) -> ArrayLike:
        points = SmoothingUtil._check_span(spline, x)
        values = spline.ppoly.derivative()(points)
        return float(values) if np.ndim(x) == 0 else values

    @staticmethod
    def resample(spline: SmoothingSpline, new_mesh: Mesh) -> np.ndarray:
        """Evaluate the spline at the nodes of another mesh."""
        return np.asarray(SmoothingUtil.eval_spline(spline, new_mesh.nodes), dtype=float)

    @staticmethod
    def residual(spline: SmoothingSpline, x: np.ndarray, y: np.ndarray) -> float:
        """Sum of squared deviations of the spline from the data."""
        return float(np.sum((np.asarray(y, dtype=float) - SmoothingUtil.eval_spline(spline, x)) ** 2))

    @staticmethod
    def roughness(spline: SmoothingSpline) -> float:
        """Integral of s''(x)^2 over the knot span (exact for piecewise-linear s'')."""
        m = spline.second_derivatives
        h = np.diff(spline.knots)
        return float(np.sum(h * (m[:-1] ** 2 + m[:-1] * m[1:] + m[1:] ** 2)) / 3.0)

    @staticmethod
    def _check_span(spline: SmoothingSpline, x: ArrayLike) -> np.ndarray:
        points = np.asarray(x, dtype=float)
        lo, hi = spline.span
        if np.any(points < lo) or np.any(points > hi) or not np.all(np.isfinite(points)):
            raise OutOfRangeException(f"Spline evaluation outside the knot span [{lo}, {hi}]")
        return points
