"""Matplotlib figures rendered next to the textual reports.

Census commands (basis, grouplikes) can save a bar chart of counts per
degree; the figure is a side artifact and never affects the report text.
"""

from __future__ import annotations

from pathlib import Path


def save_census_figure(path: Path, counts: list[int], title: str, ylabel: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    degrees = list(range(len(counts)))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(degrees, counts, color="#4878a8")
    ax.set_xlabel("degree")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.set_xticks(degrees)
    for d, c in zip(degrees, counts):
        ax.annotate(str(c), (d, c), ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
