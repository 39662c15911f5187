"""Render the statistics ladder to an image file."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .stats import StatsReport, reference_constants


def save_ladder_figure(reports: list[StatsReport], path: str | os.PathLike,
                       dpi: int = 150) -> str:
    """Plot win fraction and Ramanujan density against prefix size."""
    if not reports:
        raise ValueError("nothing to plot: empty report list")
    sizes = [report.prefix_size for report in reports]
    wins = [report.win_fraction for report in reports]
    densities = [report.ramanujan_fraction for report in reports]
    constants = reference_constants()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.semilogx(sizes, wins, marker="o", color="tab:blue", label="win fraction")
    ax.semilogx(sizes, densities, marker="s", color="tab:orange",
                label="Ramanujan density")
    ax.axhline(constants["p0"], linestyle="--", linewidth=1, color="tab:green",
               label="2/3 betting heuristic")
    ax.axhline(constants["p1"], linestyle="--", linewidth=1, color="tab:red",
               label="naive interval estimate")
    ax.axhline(constants["half"], linestyle="--", linewidth=1, color="grey",
               label="1/2 asymptote")
    ax.set_xlabel("prime prefix size")
    ax.set_ylabel("fraction")
    ax.set_title("Prime family densities over growing prefixes")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return os.fspath(path)
