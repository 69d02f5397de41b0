import logging
import os
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
import numpy as np

from abel_inversion.constant.abel_constant import (
    ColumnConstant,
    ExitCodeConstant,
    KernelKindConstant,
    MethodConstant,
    SubcommandConstant,
)
from abel_inversion.constant.solver_constant import SmoothingConstant
from abel_inversion.exception.custom_exception import CustomException
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.mesh import Mesh
from abel_inversion.model.phantom import Phantom
from abel_inversion.model.plot_series import PlotSeries
from abel_inversion.model.reconstruction import ReconstructionOptions
from abel_inversion.model.regularization_config import RegularizationConfig
from abel_inversion.model.run_config import RunConfig
from abel_inversion.model.samples import SolutionVector, SourceSamples
from abel_inversion.model.tomography_input import TomographyInput
from abel_inversion.repository.plot_repository import PlotRepository
from abel_inversion.repository.table_repository import Table, TableRepository
from abel_inversion.util.direct_solver_util import DirectSolverUtil
from abel_inversion.util.error_analysis_util import ErrorAnalysisUtil
from abel_inversion.util.mesh_util import MeshUtil
from abel_inversion.util.quadrature_util import QuadratureUtil
from abel_inversion.util.regularization_util import RegularizationUtil
from abel_inversion.util.smoothing_util import SmoothingUtil
from abel_inversion.util.synthetic_util import SyntheticUtil
from abel_inversion.util.tomography_util import TomographyUtil

logger = logging.getLogger(__name__)


def handler(event: Dict[str, Any]) -> int:
    """Build a RunConfig from command-line options and run it.

    Args:
        event: Option values keyed by RunConfig field name

    Returns:
        int: Process exit status
    """
    try:
        config = RunConfig.from_dict(event)
    except CustomException as e:
        return report_failure(e)
    return run(config)


def run(config: RunConfig) -> int:
    """Dispatch one subcommand and map its failure to an exit status.

    Returns:
        int: 0 on success, the exit code of the raised error otherwise
    """
    try:
        logger.info(f"Subcommand: {config.subcommand}, input: {config.input_path}, output: {config.output_path}")
        subcommand_handler = HANDLERS.get(config.subcommand)
        if subcommand_handler is None:
            raise InvalidArgumentException(f"Unknown subcommand: {config.subcommand}")
        subcommand_handler(config)
        return ExitCodeConstant.SUCCESS

    except CustomException as e:
        return report_failure(e)
    except Exception as e:
        logger.exception(f"Error during {config.subcommand}: {e}")
        click.echo(f"internal error: {e}", err=True)
        return ExitCodeConstant.INTERNAL_ERROR


def report_failure(error: CustomException) -> int:
    logger.error(f"{type(error).__name__}: {error}")
    click.echo(f"error: {error}", err=True)
    return error.exit_code


def run_forward(config: RunConfig) -> None:
    """(r, k) table to (x, q) table."""
    repository = TableRepository()
    table = read_columns(repository, config.input_path, [ColumnConstant.R, ColumnConstant.K])
    mesh = MeshUtil.custom_mesh(table[ColumnConstant.R])
    q = QuadratureUtil.forward_apply(mesh, table[ColumnConstant.K])

    repository.write_table({ColumnConstant.X: mesh.nodes, ColumnConstant.Q: q.values}, config.output_path)
    write_metadata(repository, config, {"mesh_size": mesh.size})
    emit_plots(config, [PlotSeries(ColumnConstant.Q, mesh.nodes, q.values)], x_label=ColumnConstant.X, y_label=ColumnConstant.Q)


def run_invert(config: RunConfig) -> None:
    """(x, q) table to (r, k) table by the chosen direct method."""
    repository = TableRepository()
    mesh, q = read_source(repository, config.input_path)
    k = solve_direct(config, mesh, q)
    residual = RegularizationUtil.residual_norm(
        QuadratureUtil.assemble_matrix(mesh, KernelKindConstant.SQRT_KERNEL), k.values[:-1], 0.5 * q.values[:-1]
    )

    repository.write_table({ColumnConstant.R: mesh.nodes, ColumnConstant.K: k.values}, config.output_path)
    write_metadata(repository, config, {"mesh_size": mesh.size, "method": config.method, "residual": residual})
    emit_plots(config, [PlotSeries(ColumnConstant.K, mesh.nodes, k.values)])


def run_regularize(config: RunConfig) -> None:
    """Direct solution plus the Tikhonov solution with alpha from --alpha or the discrepancy principle."""
    repository = TableRepository()
    mesh, q = read_source(repository, config.input_path)
    k = DirectSolverUtil.solve_first(mesh, q, config.endpoint_rule)
    settings = RegularizationConfig(delta=config.delta or 0.0, alpha_override=config.alpha)
    k_alpha, outcome = RegularizationUtil.regularized_solution(mesh, q, settings, config.endpoint_rule)

    repository.write_table(
        {
            ColumnConstant.R: mesh.nodes,
            ColumnConstant.K: k.values,
            ColumnConstant.K_ALPHA: k_alpha.values,
            ColumnConstant.ALPHA: np.full(mesh.size, outcome.alpha),
        },
        config.output_path,
    )
    write_metadata(
        repository,
        config,
        {"mesh_size": mesh.size, "delta": settings.delta, "regularization": outcome.to_dict()},
    )
    emit_plots(
        config,
        [PlotSeries(ColumnConstant.K, mesh.nodes, k.values), PlotSeries(ColumnConstant.K_ALPHA, mesh.nodes, k_alpha.values)],
    )


def run_errors(config: RunConfig) -> None:
    """First-method solution with signed node errors, bounds and the refined solution."""
    repository = TableRepository()
    mesh, q = read_source(repository, config.input_path)
    k = DirectSolverUtil.solve_first(mesh, q, config.endpoint_rule)
    error = ErrorAnalysisUtil.error_recursion(mesh, k)
    deltas = np.zeros(mesh.size) if q.noise_levels is None else 0.5 * q.noise_levels
    bounds = ErrorAnalysisUtil.noisy_bounds(mesh, error, deltas)
    refined = ErrorAnalysisUtil.refined_solution(k, error)

    repository.write_table(
        {
            ColumnConstant.R: mesh.nodes,
            ColumnConstant.K: k.values,
            ColumnConstant.DK: error.node_errors,
            ColumnConstant.BOUND: bounds,
            ColumnConstant.K_REFINED: refined.values,
        },
        config.output_path,
    )
    write_metadata(
        repository,
        config,
        {
            "mesh_size": mesh.size,
            "max_node_error": float(np.max(np.abs(error.node_errors))),
            "max_bound": float(np.max(bounds)),
        },
    )
    emit_plots(
        config,
        [PlotSeries(ColumnConstant.K, mesh.nodes, k.values), PlotSeries(ColumnConstant.K_REFINED, mesh.nodes, refined.values)],
    )


def run_smooth(config: RunConfig) -> None:
    """Smooth every data column of an (x, ...) table, optionally onto a uniform grid.

    A delta column holds nonnegative noise levels and is interpolated linearly
    instead of smoothed.
    """
    repository = TableRepository()
    table = read_columns(repository, config.input_path, [ColumnConstant.X])
    x = table[ColumnConstant.X]
    if x.size < SmoothingConstant.MIN_SPLINE_POINTS:
        raise InvalidArgumentException(
            f"{config.input_path}: smoothing needs at least {SmoothingConstant.MIN_SPLINE_POINTS} rows, got {x.size}"
        )
    targets = x
    if config.resample_n is not None:
        targets = MeshUtil.uniform_mesh(config.resample_n, 1.0).nodes * (x[-1] - x[0]) + x[0]
        targets[-1] = x[-1]

    columns: Dict[str, np.ndarray] = {ColumnConstant.X: targets}
    series: List[PlotSeries] = []
    for name, values in table.items():
        if name == ColumnConstant.X:
            continue
        if name == ColumnConstant.DELTA:
            columns[name] = np.interp(targets, x, values)
        else:
            spline = SmoothingUtil.fit_spline(x, values, config.p)
            columns[name] = np.asarray(SmoothingUtil.eval_spline(spline, targets), dtype=float)
        series.append(PlotSeries(name, targets, columns[name]))

    repository.write_table(columns, config.output_path)
    write_metadata(repository, config, {"points": int(x.size), "resampled_points": int(targets.size), "p": config.p})
    emit_plots(config, series, x_label=ColumnConstant.X, y_label=ColumnConstant.Y)


def run_synthetic(config: RunConfig) -> None:
    """Phantom (x, q, delta, k) table on a uniform or custom mesh."""
    repository = TableRepository()
    if config.mesh_path is not None:
        mesh = MeshUtil.custom_mesh(read_columns(repository, config.mesh_path, [ColumnConstant.X])[ColumnConstant.X])
    else:
        mesh = MeshUtil.uniform_mesh(config.nodes, config.radius)
    phantom = Phantom(config.phantom, config.k0, config.radius)
    sample = SyntheticUtil.sample_phantom(phantom, mesh, config.noise, config.seed)

    repository.write_table(
        {
            ColumnConstant.X: mesh.nodes,
            ColumnConstant.Q: sample.q.values,
            ColumnConstant.DELTA: sample.q.noise_levels,
            ColumnConstant.K: sample.k_true.values,
        },
        config.output_path,
    )
    write_metadata(
        repository,
        config,
        {
            "mesh_size": mesh.size,
            "phantom": phantom.to_dict(),
            "noise": config.noise,
            "seed": config.seed,
            "noise_norm": sample.noise_norm,
        },
    )
    emit_plots(
        config,
        [
            PlotSeries(ColumnConstant.K, mesh.nodes, sample.k_true.values),
            PlotSeries(ColumnConstant.Q, mesh.nodes, sample.q.values),
        ],
        y_label="value",
    )


def run_tomo(config: RunConfig) -> None:
    """(x, I) table through smoothing, conversion, inversion and optional regularization."""
    repository = TableRepository()
    table = read_columns(repository, config.input_path, [ColumnConstant.X, ColumnConstant.INTENSITY])
    mesh = MeshUtil.custom_mesh(table[ColumnConstant.X])
    inp = TomographyInput(
        table[ColumnConstant.INTENSITY],
        config.planck_reference,
        config.source_temperature,
        table.get(ColumnConstant.DELTA),
    )
    regularization = None
    if config.alpha is not None or config.delta is not None:
        regularization = RegularizationConfig(delta=config.delta or 0.0, alpha_override=config.alpha)
    options_kwargs: Dict[str, Any] = {
        "method": config.method,
        "smooth": config.smooth_p is not None,
        "resample_n": config.resample_n,
        "regularization": regularization,
        "endpoint_rule": config.endpoint_rule,
        "qprime_scheme": config.qprime_scheme,
    }
    if config.smooth_p is not None:
        options_kwargs["smoothing_parameter"] = config.smooth_p
    result = TomographyUtil.reconstruct(inp, mesh, ReconstructionOptions(**options_kwargs))

    nodes = result.mesh.nodes
    columns: Dict[str, np.ndarray] = {ColumnConstant.R: nodes, ColumnConstant.K: result.unregularized.values}
    series = [PlotSeries(ColumnConstant.K, nodes, result.unregularized.values)]
    if result.error is not None:
        columns[ColumnConstant.DK] = result.error.node_errors
        columns[ColumnConstant.BOUND] = result.bounds
        columns[ColumnConstant.K_REFINED] = result.refined.values
        series.append(PlotSeries(ColumnConstant.K_REFINED, nodes, result.refined.values))
    if regularization is not None:
        columns[ColumnConstant.K_ALPHA] = result.solution.values
        series.append(PlotSeries(ColumnConstant.K_ALPHA, nodes, result.solution.values))

    repository.write_table(columns, config.output_path)
    write_metadata(
        repository,
        config,
        {
            "planck_reference": config.planck_reference,
            "source_temperature": config.source_temperature,
            "diagnostics": result.diagnostics.to_dict(),
        },
    )
    emit_plots(config, series)


def read_columns(repository: TableRepository, path: str, required: List[str]) -> Table:
    table = repository.read_table(path)
    repository.require_columns(table, required, path)
    return table


def read_source(repository: TableRepository, path: str) -> Tuple[Mesh, SourceSamples]:
    """Mesh and source samples from an (x, q[, delta]) table."""
    table = read_columns(repository, path, [ColumnConstant.X, ColumnConstant.Q])
    mesh = MeshUtil.custom_mesh(table[ColumnConstant.X])
    return mesh, SourceSamples(table[ColumnConstant.Q], table.get(ColumnConstant.DELTA))


def solve_direct(config: RunConfig, mesh: Mesh, q: SourceSamples) -> SolutionVector:
    if config.method == MethodConstant.FIRST:
        return DirectSolverUtil.solve_first(mesh, q, config.endpoint_rule)
    smoothing_parameter = config.smooth_p if config.smooth_p is not None else config.p
    qprime = DirectSolverUtil.estimate_qprime(mesh, q, config.qprime_scheme, smoothing_parameter)
    return DirectSolverUtil.solve_second(mesh, q, qprime, config.endpoint_rule)


def write_metadata(repository: TableRepository, config: RunConfig, metadata: Dict[str, Any]) -> None:
    repository.write_metadata({"config": config.to_dict(), **metadata}, config.output_path)


def emit_plots(
    config: RunConfig,
    series: List[PlotSeries],
    x_label: str = ColumnConstant.R,
    y_label: str = ColumnConstant.K,
) -> Optional[str]:
    if not config.plot:
        return None
    stem = os.path.splitext(config.output_path)[0]
    plots = PlotRepository()
    plots.emit_plot_data(series, f"{stem}_plot.csv")
    plots.emit_svg(series, f"{stem}_plot.svg", x_label, y_label)
    return stem


HANDLERS: Dict[str, Callable[[RunConfig], None]] = {
    SubcommandConstant.FORWARD: run_forward,
    SubcommandConstant.INVERT: run_invert,
    SubcommandConstant.REGULARIZE: run_regularize,
    SubcommandConstant.ERRORS: run_errors,
    SubcommandConstant.SMOOTH: run_smooth,
    SubcommandConstant.SYNTHETIC: run_synthetic,
    SubcommandConstant.TOMO: run_tomo,
}
