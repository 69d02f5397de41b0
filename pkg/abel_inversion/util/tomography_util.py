import logging
from typing import Optional

import numpy as np

from abel_inversion.constant.abel_constant import KernelKindConstant, MethodConstant
from abel_inversion.exception.invalid_measurement_exception import InvalidMeasurementException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.reconstruction import ReconstructionDiagnostics, ReconstructionOptions, ReconstructionResult
from abel_inversion.model.samples import SourceSamples
from abel_inversion.model.tomography_input import TomographyInput
from abel_inversion.util.common_util import CommonUtil
from abel_inversion.util.direct_solver_util import DirectSolverUtil
from abel_inversion.util.error_analysis_util import ErrorAnalysisUtil
from abel_inversion.util.mesh_util import MeshUtil
from abel_inversion.util.quadrature_util import QuadratureUtil
from abel_inversion.util.regularization_util import RegularizationUtil
from abel_inversion.util.smoothing_util import SmoothingUtil

logger = logging.getLogger(__name__)


class TomographyUtil:
    """Infrared tomography front end: q = -ln(I / B(T0)) and the full reconstruction."""

    @staticmethod
    def intensity_to_q(inp: TomographyInput) -> SourceSamples:
        """Convert ray intensities to the Abel right-hand side.

        Raises:
            InvalidMeasurementException: If B(T0) or any intensity is nonpositive or not finite
        """
        reference = TomographyUtil._check_reference(inp.planck_reference)
        intensities = inp.intensities
        if intensities.ndim != 1 or not np.all(np.isfinite(intensities)):
            raise InvalidMeasurementException("Intensities must be a finite one-dimensional series")
        if np.any(intensities <= 0.0):
            index = int(np.argmax(intensities <= 0.0))
            raise InvalidMeasurementException(f"Intensity at node {index} is nonpositive: {intensities[index]}")
        return SourceSamples(-np.log(intensities / reference), inp.noise_levels)

    @staticmethod
    def q_to_intensity(q: SourceSamples, planck_reference: float, source_temperature: Optional[float] = None) -> TomographyInput:
        """I = B e^{-q}, the inverse of intensity_to_q."""
        reference = TomographyUtil._check_reference(planck_reference)
        return TomographyInput(reference * np.exp(-q.values), reference, source_temperature, q.noise_levels)

    @staticmethod
    def reconstruct(
        inp: TomographyInput,
        mesh: Mesh,
        options: Optional[ReconstructionOptions] = None,
    ) -> ReconstructionResult:
        """Run the measurement-to-profile pipeline.

        Optional spline smoothing and resampling of I, conversion to q, the
        chosen direct solver, error estimates for the first method and the
        optional Tikhonov path.

        Args:
            inp: Intensities on the mesh nodes and B(T0)
            mesh: Measurement mesh
            options: Pipeline switches; None runs the plain first method

        Returns:
            ReconstructionResult: Solutions, estimates and diagnostics
        """
        options = options or ReconstructionOptions()
        CommonUtil.require_length(inp.intensities, mesh.size, "Intensities")

        work_mesh, work_input = mesh, inp
        if options.smooth:
            spline = SmoothingUtil.fit_spline(mesh.nodes, inp.intensities, options.smoothing_parameter)
            if options.resample_n is not None:
                work_mesh = MeshUtil.uniform_mesh(options.resample_n, mesh.radius)
            work_input = TomographyInput(
                SmoothingUtil.resample(spline, work_mesh), inp.planck_reference, inp.source_temperature
            )
            logger.info(f"Smoothed intensities with p = {options.smoothing_parameter} onto {work_mesh.size} nodes")

        q = TomographyUtil.intensity_to_q(work_input)
        if options.method == MethodConstant.FIRST:
            direct = DirectSolverUtil.solve_first(work_mesh, q, options.endpoint_rule)
        else:
            qprime = DirectSolverUtil.estimate_qprime(
                work_mesh, q, options.qprime_scheme, options.smoothing_parameter
            )
            direct = DirectSolverUtil.solve_second(work_mesh, q, qprime, options.endpoint_rule)

        matrix = QuadratureUtil.assemble_matrix(work_mesh, KernelKindConstant.SQRT_KERNEL)
        rhs = 0.5 * q.values[:-1]
        direct_residual = RegularizationUtil.residual_norm(matrix, direct.values[:-1], rhs)
        diagnostics = ReconstructionDiagnostics(
            method=options.method,
            mesh_size=work_mesh.size,
            residual=direct_residual,
            smoothing_parameter=options.smoothing_parameter if options.smooth else None,
        )

        error = bounds = refined = None
        if options.method == MethodConstant.FIRST:
            error = ErrorAnalysisUtil.error_recursion(work_mesh, direct)
            bounds = ErrorAnalysisUtil.noisy_bounds(work_mesh, error, TomographyUtil._data_errors(inp, mesh, work_mesh))
            refined = ErrorAnalysisUtil.refined_solution(direct, error)
            diagnostics.max_node_error = float(np.max(np.abs(error.node_errors)))
            diagnostics.max_bound = float(np.max(bounds))

        solution = direct
        if options.regularization is not None:
            solution, outcome = RegularizationUtil.regularized_solution(
                work_mesh, q, options.regularization, options.endpoint_rule
            )
            diagnostics.alpha = outcome.alpha
            diagnostics.alpha_status = outcome.status
            diagnostics.alpha_iterations = outcome.iterations
            diagnostics.unregularized_residual = direct_residual
            diagnostics.residual = outcome.residual

        return ReconstructionResult(
            mesh=work_mesh,
            source=q,
            solution=solution,
            unregularized=direct,
            diagnostics=diagnostics,
            error=error,
            bounds=bounds,
            refined=refined,
        )

    @staticmethod
    def _check_reference(planck_reference: float) -> float:
        if not (np.isfinite(planck_reference) and planck_reference > 0.0):
            raise InvalidMeasurementException(f"Planck reference must be positive, got {planck_reference}")
        return float(planck_reference)

    @staticmethod
    def _data_errors(inp: TomographyInput, mesh: Mesh, work_mesh: Mesh) -> np.ndarray:
        # noise levels are on the q scale; the bounds take f = q / 2
        if inp.noise_levels is None:
            return np.zeros(work_mesh.size)
        if work_mesh is mesh:
            return 0.5 * inp.noise_levels
        return 0.5 * np.interp(work_mesh.nodes, mesh.nodes, inp.noise_levels)
