import json

import numpy as np
import pytest
from click.testing import CliRunner

from abel_inversion.abel_function import handler, run
from abel_inversion.constant.abel_constant import ExitCodeConstant
from abel_inversion.model.run_config import RunConfig
from abel_inversion.repository.table_repository import TableRepository
from app import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def tables():
    return TableRepository()


def invoke(runner, *args, **kwargs):
    return runner.invoke(cli, [str(arg) for arg in args], **kwargs)


def read_metadata(path) -> dict:
    with open(f"{path}.json", encoding="utf-8") as handle:
        return json.load(handle)


class TestCommands:
    def test_invert_constant_phantom(self, runner, tables, tmp_path):
        source, solution = tmp_path / "q.csv", tmp_path / "k.csv"
        assert invoke(runner, "synthetic", "--phantom", "constant", "--k0", 2.0, "--nodes", 21, "-o", source).exit_code == 0
        result = invoke(runner, "invert", "-i", source, "-o", solution, "--method", "first")
        assert result.exit_code == 0, result.output
        table = tables.read_table(str(solution))
        assert list(table) == ["r", "k"]
        assert table["k"] == pytest.approx(np.full(21, 2.0), abs=1e-12)

    def test_forward_invert_round_trip(self, runner, tables, rng, tmp_path):
        profile, source, solution = tmp_path / "k_in.csv", tmp_path / "q.csv", tmp_path / "k_out.csv"
        r = np.concatenate([[0.0], np.cumsum(rng.uniform(0.1, 1.0, 30))])
        k = rng.uniform(0.5, 1.5, r.size)
        tables.write_table({"r": r, "k": k}, str(profile))
        assert invoke(runner, "forward", "-i", profile, "-o", source).exit_code == 0
        assert invoke(runner, "invert", "-i", source, "-o", solution).exit_code == 0
        recovered = tables.read_table(str(solution))["k"]
        assert recovered[:-1] == pytest.approx(k[:-1], rel=1e-12)

    def test_second_method(self, runner, tables, tmp_path):
        source, solution = tmp_path / "q.csv", tmp_path / "k.csv"
        invoke(runner, "synthetic", "--phantom", "parabolic", "--nodes", 201, "-o", source)
        result = invoke(runner, "invert", "-i", source, "-o", solution, "--method", "second", "--endpoint", "zero")
        assert result.exit_code == 0, result.output
        table = tables.read_table(str(solution))
        truth = 1.0 - table["r"] ** 2
        assert np.max(np.abs(table["k"] - truth)[1:-1]) < 0.05
        assert table["k"][-1] == 0.0
        assert read_metadata(solution)["method"] == "second"

    def test_regularize_matches_emitted_noise_norm(self, runner, tables, tmp_path):
        source, solution = tmp_path / "q.csv", tmp_path / "k.csv"
        assert invoke(
            runner, "synthetic", "--phantom", "parabolic", "--noise", 0.1, "--seed", 7, "--nodes", 11, "-o", source
        ).exit_code == 0
        delta = read_metadata(source)["noise_norm"]
        result = invoke(runner, "regularize", "-i", source, "-o", solution, "--delta", repr(delta), "--plot")
        assert result.exit_code == 0, result.output
        regularization = read_metadata(solution)["regularization"]
        assert regularization["status"] == "matched"
        assert abs(regularization["residual"] - delta) <= 1e-3 * delta
        table = tables.read_table(str(solution))
        assert list(table) == ["r", "k", "k_alpha", "alpha"]
        assert np.all(table["alpha"] == regularization["alpha"])
        svg = (tmp_path / "k_plot.svg").read_text(encoding="utf-8")
        assert 'id="series-k"' in svg and 'id="series-k_alpha"' in svg
        lines = (tmp_path / "k_plot.csv").read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2 * 11 + 1

    def test_errors_columns(self, runner, tables, tmp_path):
        source, solution = tmp_path / "q.csv", tmp_path / "dk.csv"
        invoke(runner, "synthetic", "--phantom", "semicircle", "--nodes", 51, "--noise", 0.01, "-o", source)
        assert invoke(runner, "errors", "-i", source, "-o", solution).exit_code == 0
        table = tables.read_table(str(solution))
        assert list(table) == ["r", "k", "dk", "bound", "k_refined"]
        assert np.all(table["bound"] >= np.abs(table["dk"]))
        assert table["k_refined"] == pytest.approx(table["k"] - table["dk"], abs=1e-14)

    def test_smooth_resamples(self, runner, tables, tmp_path):
        source, smoothed = tmp_path / "q.csv", tmp_path / "s.csv"
        invoke(runner, "synthetic", "--phantom", "parabolic", "--nodes", 11, "-o", source)
        assert invoke(runner, "smooth", "-i", source, "-o", smoothed, "--p", 1.0, "--resample-n", 20).exit_code == 0
        table = tables.read_table(str(smoothed))
        assert list(table) == ["x", "q", "delta", "k"]
        assert table["x"].size == 20
        assert table["x"][-1] == 1.0
        assert table["q"][0] == pytest.approx(4.0 / 3.0, abs=1e-12)

    def test_smooth_keeps_noise_levels_nonnegative(self, runner, tables, tmp_path):
        source, smoothed, solution = tmp_path / "q.csv", tmp_path / "s.csv", tmp_path / "k.csv"
        invoke(runner, "synthetic", "--phantom", "parabolic", "--nodes", 11, "--noise", 0.1, "--seed", 7, "-o", source)
        assert invoke(runner, "smooth", "-i", source, "-o", smoothed, "--resample-n", 20).exit_code == 0
        table = tables.read_table(str(smoothed))
        assert np.all(table["delta"] >= 0.0)
        assert table["delta"][-1] == 0.0
        result = invoke(runner, "invert", "-i", smoothed, "-o", solution)
        assert result.exit_code == 0, result.output
        assert tables.read_table(str(solution))["r"].size == 20

    def test_synthetic_on_custom_mesh(self, runner, tables, tmp_path):
        mesh, source = tmp_path / "mesh.csv", tmp_path / "q.csv"
        tables.write_table({"x": [0.0, 0.1, 0.3, 0.6, 1.0]}, str(mesh))
        assert invoke(runner, "synthetic", "--mesh", mesh, "--phantom", "semicircle", "-o", source).exit_code == 0
        table = tables.read_table(str(source))
        assert table["q"] == pytest.approx(0.5 * np.pi * (1.0 - table["x"] ** 2), rel=1e-14)
        assert read_metadata(source)["noise_norm"] == 0.0

    def test_tomo_pipeline(self, runner, tables, tmp_path):
        intensity, solution = tmp_path / "I.csv", tmp_path / "k.csv"
        x = np.array([0.0, 0.1, 0.25, 0.4, 0.6, 0.75, 0.9, 1.0])
        tables.write_table({"x": x, "I": 3.0 * np.exp(-2.0 * 0.7 * np.sqrt(1.0 - x**2))}, str(intensity))
        result = invoke(
            runner, "tomo", "-i", intensity, "-o", solution, "--planck-reference", 3.0, "--source-temperature", 894.4
        )
        assert result.exit_code == 0, result.output
        table = tables.read_table(str(solution))
        assert table["k"] == pytest.approx(np.full(x.size, 0.7), abs=1e-12)
        metadata = read_metadata(solution)
        assert metadata["source_temperature"] == 894.4
        assert metadata["diagnostics"]["method"] == "first"

    def test_tomo_with_smoothing_and_regularization(self, runner, tables, tmp_path):
        source, intensity, solution = tmp_path / "q.csv", tmp_path / "I.csv", tmp_path / "k.csv"
        invoke(runner, "synthetic", "--phantom", "parabolic", "--nodes", 11, "--noise", 0.01, "--seed", 3, "-o", source)
        q = tables.read_table(str(source))
        tables.write_table({"x": q["x"], "I": np.exp(-q["q"])}, str(intensity))
        result = invoke(
            runner, "tomo", "-i", intensity, "-o", solution, "--planck-reference", 1.0,
            "--smooth-p", 0.99999, "--resample-n", 20, "--alpha", 1e-2, "--plot",
        )
        assert result.exit_code == 0, result.output
        table = tables.read_table(str(solution))
        assert table["r"].size == 20
        assert "k_alpha" in table
        assert read_metadata(solution)["diagnostics"]["alpha_status"] == "override"
        assert (tmp_path / "k_plot.svg").exists()


class TestDeterminism:
    def test_identical_invocations_identical_bytes(self, runner, tmp_path):
        outputs = []
        for name in ("a", "b"):
            source, solution = tmp_path / f"{name}_q.csv", tmp_path / f"{name}_k.csv"
            invoke(runner, "synthetic", "--phantom", "parabolic", "--noise", 0.1, "--seed", 7, "--nodes", 31, "-o", source)
            invoke(runner, "errors", "-i", source, "-o", solution)
            outputs.append((source.read_bytes(), solution.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_seed_from_environment(self, runner, tmp_path):
        flagged, from_env = tmp_path / "flag.csv", tmp_path / "env.csv"
        invoke(runner, "synthetic", "--nodes", 9, "--noise", 0.1, "--seed", 5, "-o", flagged)
        result = invoke(
            runner, "synthetic", "--nodes", 9, "--noise", 0.1, "-o", from_env,
            auto_envvar_prefix="ABEL", env={"ABEL_SYNTHETIC_SEED": "5"},
        )
        assert result.exit_code == 0, result.output
        assert flagged.read_bytes() == from_env.read_bytes()


class TestExitCodes:
    def test_missing_input(self, runner, tmp_path):
        result = invoke(runner, "invert", "-i", tmp_path / "absent.csv", "-o", tmp_path / "k.csv")
        assert result.exit_code == ExitCodeConstant.FILE_NOT_FOUND
        assert "error:" in result.output

    def test_ragged_input(self, runner, tmp_path):
        source = tmp_path / "q.csv"
        source.write_text("x,q\n0,2\n0.5\n1,0\n", encoding="utf-8")
        result = invoke(runner, "invert", "-i", source, "-o", tmp_path / "k.csv")
        assert result.exit_code == ExitCodeConstant.PARSE_ERROR
        assert ":3:" in result.output

    def test_invalid_mesh(self, runner, tmp_path):
        source = tmp_path / "q.csv"
        source.write_text("x,q\n0,2\n0.5,1\n0.5,1\n1,0\n", encoding="utf-8")
        result = invoke(runner, "invert", "-i", source, "-o", tmp_path / "k.csv")
        assert result.exit_code == ExitCodeConstant.INVALID_MESH
        assert not (tmp_path / "k.csv").exists()

    def test_nonpositive_intensity(self, runner, tmp_path):
        intensity = tmp_path / "I.csv"
        intensity.write_text("x,I\n0,0.5\n0.5,0\n1,1\n", encoding="utf-8")
        result = invoke(runner, "tomo", "-i", intensity, "-o", tmp_path / "k.csv", "--planck-reference", 1.0)
        assert result.exit_code == ExitCodeConstant.INVALID_MEASUREMENT

    def test_synthetic_needs_a_mesh(self, runner, tmp_path):
        result = invoke(runner, "synthetic", "-o", tmp_path / "q.csv")
        assert result.exit_code == ExitCodeConstant.INVALID_ARGUMENT

    def test_regularize_needs_delta_or_alpha(self, runner, tmp_path):
        source = tmp_path / "q.csv"
        invoke(runner, "synthetic", "--nodes", 5, "-o", source)
        result = invoke(runner, "regularize", "-i", source, "-o", tmp_path / "k.csv")
        assert result.exit_code == ExitCodeConstant.INVALID_ARGUMENT

    def test_phantom_outside_mesh(self, runner, tmp_path):
        mesh = tmp_path / "mesh.csv"
        mesh.write_text("x\n0\n1\n2\n", encoding="utf-8")
        result = invoke(runner, "synthetic", "--mesh", mesh, "--R", 1.0, "-o", tmp_path / "q.csv")
        assert result.exit_code == ExitCodeConstant.OUT_OF_RANGE

    def test_smooth_header_only_table(self, runner, tmp_path):
        source = tmp_path / "q.csv"
        source.write_text("x,q\n", encoding="utf-8")
        result = invoke(runner, "smooth", "-i", source, "-o", tmp_path / "s.csv", "--resample-n", 5)
        assert result.exit_code == ExitCodeConstant.INVALID_ARGUMENT
        assert not (tmp_path / "s.csv").exists()

    def test_unknown_choice_rejected_by_click(self, runner, tmp_path):
        result = invoke(runner, "invert", "-i", tmp_path / "q.csv", "-o", tmp_path / "k.csv", "--method", "third")
        assert result.exit_code == 2


class TestDispatcher:
    def test_handler_rejects_bad_config(self):
        assert handler({"subcommand": "tomo", "output_path": "k.csv", "input_path": "I.csv"}) == ExitCodeConstant.INVALID_ARGUMENT

    def test_run_maps_internal_errors(self, monkeypatch, tmp_path):
        import abel_inversion.abel_function as abel_function

        def explode(config):
            raise KeyError("unexpected")

        monkeypatch.setitem(abel_function.HANDLERS, "forward", explode)
        config = RunConfig(subcommand="forward", output_path=str(tmp_path / "q.csv"), input_path="k.csv")
        assert run(config) == ExitCodeConstant.INTERNAL_ERROR
