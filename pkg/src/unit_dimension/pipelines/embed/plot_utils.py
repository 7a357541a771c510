"""Plots of the three-layer construction's parameters across n."""

import logging

import matplotlib.pyplot as plt
import pandas as pd
from matplotlib.axes import Axes
from matplotlib.figure import Figure

logger = logging.getLogger(__name__)


def create_radius_plot(ax: Axes, table: pd.DataFrame) -> None:
    """Outer and inner ring radii against the cycle length."""
    ax.plot(table["n"], table["R_outer"], label="outer radius R")
    ax.plot(table["n"], table["rho_inner"], label="inner radius ρ")
    ax.set_xlabel("n")
    ax.set_ylabel("radius")
    ax.set_title("Ring radii")
    ax.legend()
    ax.grid(True, alpha=0.3)


def create_height_plot(ax: Axes, table: pd.DataFrame) -> None:
    """Layer heights; ``h`` is the copy ring above the shadows, ``g`` the apex below."""
    ax.plot(table["n"], table["h"], label="copy ring height h")
    ax.plot(table["n"], table["g"], label="apex depth g")
    ax.set_xlabel("n")
    ax.set_ylabel("height")
    ax.set_title("Layer heights")
    ax.legend()
    ax.grid(True, alpha=0.3)


def create_winding_plot(ax: Axes, table: pd.DataFrame) -> None:
    ax.step(table["n"], table["winding"], where="mid")
    ax.set_xlabel("n")
    ax.set_ylabel("winding k")
    ax.set_title("Outer star polygon winding")
    ax.grid(True, alpha=0.3)


def create_residual_plot(ax: Axes, table: pd.DataFrame) -> None:
    # a zero residual has no logarithm; floor it at machine precision
    ax.semilogy(table["n"], table["max_edge_residual"].clip(lower=1e-17), ".")
    ax.set_xlabel("n")
    ax.set_ylabel("max edge residual")
    ax.set_title("Verification residual")
    ax.grid(True, alpha=0.3)


def create_ring_parameter_figure(
    table: pd.DataFrame, figure_size: tuple[float, float] = (12, 9)
) -> Figure:
    """Two-by-two summary of the parameter sweep."""
    fig, axes = plt.subplots(2, 2, figsize=figure_size)
    create_radius_plot(axes[0, 0], table)
    create_height_plot(axes[0, 1], table)
    create_winding_plot(axes[1, 0], table)
    create_residual_plot(axes[1, 1], table)
    fig.suptitle("Three-layer embeddings of M(C_n)")
    fig.tight_layout()
    logger.info(f"Ring parameter figure covers n = {table['n'].min()}..{table['n'].max()}")
    return fig
