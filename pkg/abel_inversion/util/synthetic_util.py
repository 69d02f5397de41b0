import logging
import math
from typing import Union

import numpy as np
from scipy.integrate import quad

from abel_inversion.constant.abel_constant import IntegrandConstant, PhantomConstant
from abel_inversion.constant.solver_constant import OracleConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.exception.oracle_failure_exception import OracleFailureException
from abel_inversion.exception.out_of_range_exception import OutOfRangeException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.phantom import Phantom
from abel_inversion.model.samples import SolutionVector, SourceSamples
from abel_inversion.model.singular_integrand import SingularIntegrand
from abel_inversion.model.synthetic_sample import SyntheticSample

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class SyntheticUtil:
    """Analytic phantoms, seeded noise and a brute-force quadrature oracle."""

    @staticmethod
    def phantom_k(ph: Phantom, r: ArrayLike) -> ArrayLike:
        """Closed-form absorption coefficient of the phantom on [0, R]."""
        radii = SyntheticUtil._check_range(ph, r)
        if ph.kind == PhantomConstant.CONSTANT:
            values = np.full_like(radii, ph.k0)
        elif ph.kind == PhantomConstant.PARABOLIC:
            values = ph.k0 * (1.0 - (radii / ph.radius) ** 2)
        else:
            values = np.sqrt((ph.radius - radii) * (ph.radius + radii))
        return float(values) if np.ndim(r) == 0 else values

    @staticmethod
    def phantom_q(ph: Phantom, x: ArrayLike) -> ArrayLike:
        """Closed-form projection q(x) = 2 integral_x^R r k(r) / sqrt(r^2 - x^2) dr.

        Raises:
            OutOfRangeException: If x lies outside [0, R]
        """
        offsets = SyntheticUtil._check_range(ph, x)
        chord = np.maximum((ph.radius - offsets) * (ph.radius + offsets), 0.0)
        if ph.kind == PhantomConstant.CONSTANT:
            values = 2.0 * ph.k0 * np.sqrt(chord)
        elif ph.kind == PhantomConstant.PARABOLIC:
            values = 4.0 * ph.k0 / (3.0 * ph.radius**2) * chord**1.5
        else:
            values = 0.5 * math.pi * chord
        return float(values) if np.ndim(x) == 0 else values

    @staticmethod
    def oracle_integral(
        f: SingularIntegrand,
        a: float,
        b: float,
        tol: float = OracleConstant.DEFAULT_TOLERANCE,
    ) -> float:
        """Adaptive Gauss-Kronrod integral of a singular kernel over [a, b].

        The substitution t = c + s^2 cancels the 1 / sqrt(t - c) factor, so
        QUADPACK integrates a smooth function of s over [sqrt(a - c), sqrt(b - c)].

        Args:
            f: Integrand descriptor
            a: Lower limit, not below the singular point
            b: Upper limit, b >= a
            tol: Absolute tolerance

        Returns:
            float: Integral value

        Raises:
            InvalidArgumentException: If the singular point lies inside (a, b] or b < a
            OracleFailureException: If QUADPACK misses the tolerance
        """
        c = float(f.singular_point)
        if b < a:
            raise InvalidArgumentException(f"Oracle interval [{a}, {b}] is reversed")
        if a < c:
            raise InvalidArgumentException(f"Singular point {c} lies inside [{a}, {b}]")
        if a == b:
            return 0.0
        if f.kind == IntegrandConstant.LOG_KERNEL and c == 0.0 and a == 0.0:
            raise InvalidArgumentException("Log kernel at r = x_lo = 0 is not integrable")

        if f.kind == IntegrandConstant.SQRT_KERNEL:
            def integrand(s: float) -> float:
                t = c + s * s
                return 2.0 * t / math.sqrt(t + c)
        elif f.kind == IntegrandConstant.MOMENT_KERNEL:
            def integrand(s: float) -> float:
                t = c + s * s
                return 2.0 * t * (t - f.anchor) / math.sqrt(t + c)
        else:
            def integrand(s: float) -> float:
                return 2.0 / math.sqrt(2.0 * c + s * s)

        value, abserr, info = quad(
            integrand,
            math.sqrt(a - c),
            math.sqrt(b - c),
            epsabs=tol,
            epsrel=0.0,
            limit=OracleConstant.SUBDIVISION_LIMIT,
            full_output=1,
        )[:3]
        if abserr > tol:
            raise OracleFailureException(
                f"Oracle missed tolerance {tol:.1e} on [{a}, {b}] ({f.kind}): error estimate {abserr:.3e}, "
                f"{info['last']} subintervals"
            )
        return float(value)

    @staticmethod
    def add_noise(q: SourceSamples, sigma: float, seed: int) -> SourceSamples:
        """Multiplicative Gaussian noise q_i (1 + sigma z_i) from a seeded PCG64 generator.

        noise_levels are set to sigma |q_i|.
        """
        if sigma < 0.0:
            raise InvalidArgumentException(f"Noise level must be nonnegative, got {sigma}")
        generator = np.random.default_rng(seed)
        draws = generator.standard_normal(len(q))
        return SourceSamples(q.values * (1.0 + sigma * draws), sigma * np.abs(q.values))

    @staticmethod
    def sample_phantom(ph: Phantom, mesh: Mesh, sigma: float = 0.0, seed: int = 0) -> SyntheticSample:
        """Sample k and q of a phantom on a mesh, optionally with noise on q."""
        if mesh.radius > ph.radius:
            raise OutOfRangeException(f"Mesh radius {mesh.radius} exceeds phantom radius {ph.radius}")
        k_true = SolutionVector(SyntheticUtil.phantom_k(ph, mesh.nodes))
        q_exact = SourceSamples(SyntheticUtil.phantom_q(ph, mesh.nodes))
        q_noisy = SyntheticUtil.add_noise(q_exact, sigma, seed)
        noise_norm = float(np.linalg.norm(0.5 * (q_noisy.values - q_exact.values)))
        logger.info(f"Sampled {ph.kind} phantom on {mesh.size} nodes, sigma = {sigma}, noise norm = {noise_norm:.6g}")
        return SyntheticSample(ph, mesh, k_true, q_exact, q_noisy, noise_norm)

    @staticmethod
    def _check_range(ph: Phantom, x: ArrayLike) -> np.ndarray:
        points = np.asarray(x, dtype=float)
        if np.any(points < 0.0) or np.any(points > ph.radius) or not np.all(np.isfinite(points)):
            raise OutOfRangeException(f"Phantom evaluation outside [0, {ph.radius}]")
        return points
