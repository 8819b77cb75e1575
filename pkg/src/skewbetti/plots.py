"""Matplotlib renderings of report data (Betti tables, scans, rook counts).

Figures are written straight to files next to the delimited output; nothing
here opens a window.  Combinatorial diagrams themselves are deliberately
not drawn (ASCII debug output covers them).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def betti_heatmap(table, path: str, title: str = "Betti table") -> str:
    """Render the coarse Betti table as an annotated (j-i) x i grid."""
    bij = table.beta_ij()
    if not bij:
        fig, ax = plt.subplots(figsize=(3, 2))
        ax.text(0.5, 0.5, "zero table", ha="center", va="center")
        ax.set_axis_off()
    else:
        imax = max(i for (i, _) in bij)
        strands = sorted({j - i for (i, j) in bij})
        grid = np.zeros((len(strands), imax + 1), dtype=int)
        for (i, j), v in bij.items():
            grid[strands.index(j - i), i] = v
        fig, ax = plt.subplots(figsize=(1.2 + 0.7 * (imax + 1),
                                        1.0 + 0.6 * len(strands)))
        masked = np.ma.masked_equal(grid, 0)
        ax.imshow(masked, cmap="viridis", aspect="auto")
        for r in range(grid.shape[0]):
            for c in range(grid.shape[1]):
                if grid[r, c]:
                    ax.text(c, r, str(grid[r, c]), ha="center", va="center",
                            color="white", fontsize=9)
        ax.set_xticks(range(imax + 1))
        ax.set_xlabel("homological degree i")
        ax.set_yticks(range(len(strands)))
        ax.set_yticklabels([str(s) for s in strands])
        ax.set_ylabel("strand j - i")
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def scan_figure(records: list[dict], path: str) -> str:
    """Scatter the oracle values against both conjectured bounds."""
    lows, lvals, ups, uvals = [], [], [], []
    for rec in records:
        for e in rec["entries"]:
            v = max(e["values"].values()) if e["values"] else 0
            lows.append(e["lower"])
            lvals.append(v)
            ups.append(e["upper"])
            uvals.append(v)
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, xs, ys, name in ((axes[0], lows, lvals, "lower bound"),
                             (axes[1], ups, uvals, "upper bound")):
        top = max(xs + ys + [1])
        jitter = (np.random.default_rng(0).random(len(xs)) - 0.5) * 0.12
        ax.plot([0, top], [0, top], "k--", lw=1)
        ax.scatter(np.array(xs) + jitter, ys, s=14, alpha=0.5)
        ax.set_xlabel(name)
        ax.set_ylabel("oracle value")
        ax.set_title(f"value vs {name} ({len(xs)} entries)")
    fig.suptitle("bipartite bound scan")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def rook_figure(report, labels: tuple[str, str], path: str) -> str:
    """Grouped bars of rook placement counts for the two boards."""
    counts_a, counts_b = report.rook_counts_a, report.rook_counts_b
    rs = np.arange(max(len(counts_a), len(counts_b)))
    ca = list(counts_a) + [0] * (len(rs) - len(counts_a))
    cb = list(counts_b) + [0] * (len(rs) - len(counts_b))
    fig, ax = plt.subplots(figsize=(1.5 + 0.8 * len(rs), 3.2))
    ax.bar(rs - 0.18, ca, width=0.36, label=labels[0])
    ax.bar(rs + 0.18, cb, width=0.36, label=labels[1])
    ax.set_xticks(rs)
    ax.set_xlabel("rooks placed")
    ax.set_ylabel("placements")
    ax.set_title("non-attacking rook counts"
                 + (" (equal)" if report.rook_equal else " (different)"))
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
