import numpy as np
import pytest

from abel_inversion.constant.abel_constant import AlphaStatusConstant, KernelKindConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.regularization_config import RegularizationConfig
from abel_inversion.util.direct_solver_util import DirectSolverUtil
from abel_inversion.util.mesh_util import MeshUtil
from abel_inversion.util.quadrature_util import QuadratureUtil
from abel_inversion.util.regularization_util import RegularizationUtil
from abel_inversion.util.synthetic_util import SyntheticUtil


@pytest.fixture
def matrix_11():
    return QuadratureUtil.assemble_matrix(MeshUtil.uniform_mesh(11, 1.0), KernelKindConstant.SQRT_KERNEL)


class TestRegularizationConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"delta": -1.0},
            {"alpha_min": 1.0, "alpha_max": 0.5},
            {"alpha_min": 0.0},
            {"rel_tol": 1.0},
            {"alpha_override": 0.0},
        ],
    )
    def test_rejects_invalid_settings(self, kwargs):
        with pytest.raises(InvalidArgumentException):
            RegularizationConfig(**kwargs)

    def test_json_round_trip(self):
        cfg = RegularizationConfig(delta=0.037, alpha_override=1e-2)
        assert RegularizationConfig.from_json(cfg.to_json()) == cfg


class TestTikhonovSolve:
    def test_identity_operator(self):
        f = np.array([0.3, -1.2, 2.0])
        assert RegularizationUtil.tikhonov_solve(np.eye(3), f, 0.25) == pytest.approx(f / 1.25, rel=1e-14)

    def test_small_alpha_approaches_triangular_solution(self, matrix_11, rng):
        f = rng.uniform(0.1, 1.0, matrix_11.size)
        exact = np.linalg.solve(matrix_11.entries, f)
        k_alpha = RegularizationUtil.tikhonov_solve(matrix_11, f, 1e-12)
        assert np.linalg.norm(k_alpha - exact) / np.linalg.norm(exact) < 1e-6

    @pytest.mark.parametrize("alpha", [0.0, -1.0, float("nan")])
    def test_rejects_nonpositive_alpha(self, alpha):
        with pytest.raises(InvalidArgumentException):
            RegularizationUtil.tikhonov_solve(np.eye(2), np.ones(2), alpha)

    def test_normal_equation_residual(self, matrix_11, rng):
        f = rng.uniform(0.0, 1.0, matrix_11.size)
        alpha = 0.3
        k_alpha = RegularizationUtil.tikhonov_solve(matrix_11, f, alpha)
        a = matrix_11.entries
        gap = alpha * k_alpha + a.T @ (a @ k_alpha) - a.T @ f
        assert np.linalg.norm(gap) <= 1e-10 * np.linalg.norm(a.T @ f)


class TestResidualNorm:
    def test_exact_solution(self, matrix_11, rng):
        f = rng.uniform(0.0, 1.0, matrix_11.size)
        k = np.linalg.solve(matrix_11.entries, f)
        assert RegularizationUtil.residual_norm(matrix_11, k, f) <= 1e-12 * np.linalg.norm(f)

    def test_zero_solution(self, matrix_11, rng):
        f = rng.uniform(0.0, 1.0, matrix_11.size)
        assert RegularizationUtil.residual_norm(matrix_11, np.zeros(matrix_11.size), f) == pytest.approx(np.linalg.norm(f))

    def test_pythagorean(self):
        assert RegularizationUtil.residual_norm(np.eye(2), np.zeros(2), np.array([3.0, 4.0])) == 5.0

    def test_shape_mismatch(self):
        with pytest.raises(InvalidArgumentException):
            RegularizationUtil.residual_norm(np.eye(2), np.zeros(3), np.ones(2))
        with pytest.raises(InvalidArgumentException):
            RegularizationUtil.residual_norm(np.ones((2, 3)), np.zeros(3), np.ones(2))


class TestChooseAlpha:
    def test_identity_closed_form(self):
        result = RegularizationUtil.choose_alpha(np.eye(2), np.array([0.6, 0.8]), RegularizationConfig(delta=0.5))
        assert result.status == AlphaStatusConstant.MATCHED
        assert result.alpha == pytest.approx(1.0, rel=1e-2)
        assert result.residual == pytest.approx(0.5, rel=1e-3)

    def test_delta_above_data_norm(self):
        result = RegularizationUtil.choose_alpha(np.eye(2), np.array([0.6, 0.8]), RegularizationConfig(delta=2.0))
        assert result.status == AlphaStatusConstant.UNREACHABLE_HIGH
        assert result.alpha == RegularizationConfig().alpha_max

    def test_delta_below_smallest_residual(self):
        result = RegularizationUtil.choose_alpha(np.eye(2), np.array([0.6, 0.8]), RegularizationConfig(delta=1e-20))
        assert result.status == AlphaStatusConstant.UNREACHABLE_LOW
        assert result.alpha == RegularizationConfig().alpha_min

    def test_rejects_zero_delta(self):
        with pytest.raises(InvalidArgumentException):
            RegularizationUtil.choose_alpha(np.eye(2), np.ones(2), RegularizationConfig(delta=0.0))

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_true_noise_norm(self, parabolic, seed):
        mesh = MeshUtil.uniform_mesh(21, 1.0)
        sample = SyntheticUtil.sample_phantom(parabolic, mesh, 0.05, seed)
        matrix = QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL)
        cfg = RegularizationConfig(delta=sample.noise_norm)
        result = RegularizationUtil.choose_alpha(matrix, 0.5 * sample.q.values[:-1], cfg)
        assert result.status == AlphaStatusConstant.MATCHED
        assert result.iterations <= 200
        assert abs(result.residual - cfg.delta) <= 1e-3 * cfg.delta

    def test_residual_and_norm_monotone_in_alpha(self, matrix_11, rng):
        f = rng.uniform(0.0, 1.0, matrix_11.size)
        residuals, norms = [], []
        for alpha in np.logspace(-10, 3, 27):
            k_alpha = RegularizationUtil.tikhonov_solve(matrix_11, f, alpha)
            residuals.append(RegularizationUtil.residual_norm(matrix_11, k_alpha, f))
            norms.append(np.linalg.norm(k_alpha))
        slack = 1e-12 * np.linalg.norm(f)
        assert np.all(np.diff(residuals) >= -slack)
        assert np.all(np.diff(norms) <= slack)


class TestRegularizedSolution:
    def test_override_skips_search(self, parabolic):
        mesh = MeshUtil.uniform_mesh(11, 1.0)
        sample = SyntheticUtil.sample_phantom(parabolic, mesh)
        k_alpha, result = RegularizationUtil.regularized_solution(mesh, sample.q, RegularizationConfig(alpha_override=1e-2))
        assert result.status == AlphaStatusConstant.OVERRIDE
        assert result.alpha == 1e-2
        assert len(k_alpha) == mesh.size

    def test_ten_percent_noise_bounds_the_worst_case(self, parabolic):
        mesh = MeshUtil.uniform_mesh(11, 1.0)
        direct_errors, regularized_errors = [], []
        for seed in range(10):
            sample = SyntheticUtil.sample_phantom(parabolic, mesh, 0.1, seed)
            direct = DirectSolverUtil.solve_first(mesh, sample.q)
            k_alpha, result = RegularizationUtil.regularized_solution(
                mesh, sample.q, RegularizationConfig(delta=sample.noise_norm)
            )
            assert result.status == AlphaStatusConstant.MATCHED
            # any alpha > 0 shrinks the solution below the exact triangular one
            assert np.linalg.norm(k_alpha.values[:-1]) < np.linalg.norm(direct.values[:-1])
            truth = sample.k_true.values[:-1]
            direct_errors.append(np.max(np.abs(direct.values[:-1] - truth)))
            regularized_errors.append(np.max(np.abs(k_alpha.values[:-1] - truth)))
        assert max(regularized_errors) < max(direct_errors)
        assert np.ptp(regularized_errors) < np.ptp(direct_errors)

    def test_center_value_enters_a_single_equation(self):
        matrix = QuadratureUtil.assemble_matrix(MeshUtil.uniform_mesh(11, 1.0), KernelKindConstant.SQRT_KERNEL).entries
        # the identity penalty on k_0 is balanced by p_00 = h alone
        assert np.count_nonzero(matrix[:, 0]) == 1
        assert matrix[0, 0] == pytest.approx(0.1, rel=1e-14)
