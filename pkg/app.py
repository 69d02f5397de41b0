#!/usr/bin/env python3
import logging
import os
import sys
from typing import Any, Callable

import click
from dotenv import load_dotenv

from abel_inversion.abel_function import handler
from abel_inversion.constant.abel_constant import (
    EndpointRuleConstant,
    MethodConstant,
    PhantomConstant,
    QprimeSchemeConstant,
    SubcommandConstant,
)
from abel_inversion.constant.solver_constant import SmoothingConstant

load_dotenv(override=True)

logging.basicConfig(
    level=os.getenv("LOG_LEVEL", "WARNING").upper(),
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)


def dispatch(subcommand: str, **options: Any) -> None:
    sys.exit(handler({"subcommand": subcommand, **options}))


def input_option(function: Callable) -> Callable:
    return click.option("-i", "--input", "input_path", type=click.Path(), required=True, help="Input CSV table.")(function)


def output_option(function: Callable) -> Callable:
    return click.option("-o", "--output", "output_path", type=click.Path(), required=True, help="Output CSV table.")(function)


def plot_option(function: Callable) -> Callable:
    return click.option("--plot", is_flag=True, help="Write <stem>_plot.csv and <stem>_plot.svg.")(function)


def endpoint_option(function: Callable) -> Callable:
    return click.option(
        "--endpoint",
        "endpoint_rule",
        type=click.Choice(EndpointRuleConstant.CHOICES),
        default=EndpointRuleConstant.EXTRAPOLATE_LINEAR,
        show_default=True,
        help="Completion of k at r = R.",
    )(function)


def method_options(function: Callable) -> Callable:
    function = click.option(
        "--qprime",
        "qprime_scheme",
        type=click.Choice(QprimeSchemeConstant.CHOICES),
        default=QprimeSchemeConstant.FORWARD_DIFFERENCE,
        show_default=True,
        help="Derivative estimate for the second method.",
    )(function)
    return click.option(
        "--method",
        type=click.Choice(MethodConstant.CHOICES),
        default=MethodConstant.FIRST,
        show_default=True,
        help="Direct solver.",
    )(function)


@click.group()
def cli() -> None:
    """Abel inversion on nonuniform meshes."""


@cli.command()
@input_option
@output_option
@plot_option
def forward(**options: Any) -> None:
    """Project an (r, k) table to an (x, q) table."""
    dispatch(SubcommandConstant.FORWARD, **options)


@cli.command()
@input_option
@output_option
@method_options
@endpoint_option
@click.option("--smooth-p", type=float, default=None, help="Spline weight for --qprime spline.")
@plot_option
def invert(**options: Any) -> None:
    """Solve for k from an (x, q[, delta]) table."""
    dispatch(SubcommandConstant.INVERT, **options)


@cli.command()
@input_option
@output_option
@endpoint_option
@click.option("--alpha", type=float, default=None, help="Fixed regularization parameter.")
@click.option("--delta", type=float, default=None, help="Discrepancy level ||A k - q/2||.")
@plot_option
def regularize(**options: Any) -> None:
    """Tikhonov solution next to the direct one."""
    dispatch(SubcommandConstant.REGULARIZE, **options)


@cli.command()
@input_option
@output_option
@endpoint_option
@plot_option
def errors(**options: Any) -> None:
    """Signed quadrature errors, noise-aware bounds and the refined solution."""
    dispatch(SubcommandConstant.ERRORS, **options)


@cli.command()
@input_option
@output_option
@click.option("--p", "p", type=float, default=SmoothingConstant.DEFAULT_SMOOTHING_PARAMETER, show_default=True, help="Spline weight.")
@click.option("--resample-n", type=int, default=None, help="Uniform node count of the output.")
@plot_option
def smooth(**options: Any) -> None:
    """Cubic smoothing spline of every data column."""
    dispatch(SubcommandConstant.SMOOTH, **options)


@cli.command()
@output_option
@click.option("--phantom", type=click.Choice(PhantomConstant.CHOICES), default=PhantomConstant.CONSTANT, show_default=True)
@click.option("--k0", type=float, default=1.0, show_default=True, help="Phantom amplitude.")
@click.option("--R", "radius", type=float, default=1.0, show_default=True, help="Phantom radius.")
@click.option("--nodes", type=int, default=None, help="Uniform mesh size.")
@click.option("--mesh", "mesh_path", type=click.Path(), default=None, help="Custom mesh table with column x.")
@click.option("--noise", type=float, default=0.0, show_default=True, help="Relative Gaussian noise level.")
@click.option("--seed", type=int, default=0, show_default=True, help="Noise generator seed.")
@plot_option
def synthetic(**options: Any) -> None:
    """Sample a phantom (x, q, delta, k) table."""
    dispatch(SubcommandConstant.SYNTHETIC, **options)


@cli.command()
@input_option
@output_option
@method_options
@endpoint_option
@click.option("--planck-reference", type=float, required=True, help="B(T0), in intensity units.")
@click.option("--source-temperature", type=float, default=None, help="T0 in degrees Celsius (metadata).")
@click.option("--smooth-p", type=float, default=None, help="Enable spline smoothing of I with this weight.")
@click.option("--resample-n", type=int, default=None, help="Uniform node count after smoothing.")
@click.option("--alpha", type=float, default=None, help="Fixed regularization parameter.")
@click.option("--delta", type=float, default=None, help="Discrepancy level ||A k - q/2||.")
@plot_option
def tomo(**options: Any) -> None:
    """Reconstruct k from an (x, I[, delta]) intensity table."""
    dispatch(SubcommandConstant.TOMO, **options)


if __name__ == "__main__":
    cli(auto_envvar_prefix="ABEL")
