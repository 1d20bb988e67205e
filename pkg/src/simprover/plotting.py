"""Benchmark figures rendered to files.

Figures label heuristics H1..Hk to keep axes readable; the mapping is
written into the figure legend text and matches the row order of the CSV
and JSON reports.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import Benchmark


def _short_labels(bench: Benchmark) -> list[str]:
    return [f"H{i + 1}" for i in range(len(bench.rows))]


def _legend_text(bench: Benchmark) -> str:
    return "\n".join(
        f"H{i + 1}: {row.heuristic}" for i, row in enumerate(bench.rows)
    )


def _bar_figure(
    labels: list[str],
    values: list[float],
    ylabel: str,
    title: str,
    legend: str,
    path: Path,
) -> Path:
    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * len(labels)), 4.8))
    ax.bar(labels, values, color="#41699b")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.text(0.02, 0.01, legend, fontsize=6, va="bottom", family="monospace")
    fig.tight_layout(rect=(0, 0.12 + 0.02 * len(labels), 1, 1))
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_benchmark_figures(bench: Benchmark, out_dir: str | Path) -> list[Path]:
    """Render solved-count and speed bar charts; returns the file paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    labels = _short_labels(bench)
    legend = _legend_text(bench)
    solved = _bar_figure(
        labels,
        [row.solved for row in bench.rows],
        "problems solved",
        f"solved of {len(bench.problems)} problems",
        legend,
        out_dir / "solved.png",
    )
    speed = _bar_figure(
        labels,
        [row.mean_kclauses_per_sec for row in bench.rows],
        "processed kclauses/sec (mean)",
        "selection-loop throughput",
        legend,
        out_dir / "speed.png",
    )
    return [solved, speed]
