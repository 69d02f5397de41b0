from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PPoly


@dataclass(frozen=True, eq=False)
class SmoothingSpline:
    """Natural cubic smoothing spline in piecewise-polynomial form.

    Attributes:
        knots (np.ndarray): Data abscissae, strictly increasing.
        ppoly (PPoly): Cubic pieces, coefficients ordered from highest power.
        second_derivatives (np.ndarray): s'' at every knot (zero at both ends).
        smoothing_parameter (float): Weight p of the residual term, in [0, 1].
    """

    knots: np.ndarray
    ppoly: PPoly
    second_derivatives: np.ndarray
    smoothing_parameter: float

    @property
    def span(self) -> tuple:
        return float(self.knots[0]), float(self.knots[-1])
