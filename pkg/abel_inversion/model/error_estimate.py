from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class ErrorEstimate:
    """Signed quadrature errors of a first-method solution.

    Attributes:
        interval_errors (np.ndarray): Upper-triangular (n-1) x (n-1) matrix of per-interval errors.
        row_sums (np.ndarray): Row sums of interval_errors, one per ray offset x_1..x_{n-1}.
        node_errors (np.ndarray): Signed error of every node, n values; the last repeats the one before.
        derivative_proxy (np.ndarray): Forward-difference slope of the solution on each interval.
    """

    interval_errors: np.ndarray
    row_sums: np.ndarray
    node_errors: np.ndarray
    derivative_proxy: np.ndarray
