"""Matplotlib figures for Hasse diagrams and box diagrams, written to files."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .composition import Composition, weight  # noqa: E402
from .diagram import BoxDiagram, c_path  # noqa: E402
from .poset import HasseDiagram  # noqa: E402


def plot_hasse(hd: HasseDiagram, path: str | Path, labels: Optional[bool] = None, dpi: int = 150):
    """Nodes in rows by weight, one segment per cover. Labels default to on for ``n <= 4``."""
    if labels is None:
        labels = hd.n <= 4
    levels = hd.levels()
    widest = max(len(v) for v in levels.values())
    pos = {}
    for rank, nodes in levels.items():
        for k, node in enumerate(nodes):
            pos[node] = ((k + 0.5) / len(nodes) * widest, rank)

    fig, ax = plt.subplots(figsize=(max(4, min(widest, 40) * 0.9), 1 + 0.9 * len(levels)))
    for upper, lower, _ in hd.edges:
        (x0, y0), (x1, y1) = pos[lower], pos[upper]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.6, zorder=1)
    xs, ys = zip(*pos.values())
    ax.scatter(xs, ys, s=12 if not labels else 0, color="k", zorder=2)
    if labels:
        for node, (x, y) in pos.items():
            ax.text(x, y, ",".join(map(str, node.parts)), ha="center", va="center",
                    fontsize=8, family="monospace",
                    bbox=dict(boxstyle="round,pad=0.2", fc="w", ec="0.3", lw=0.5))
    ax.set_yticks(sorted(levels))
    ax.set_ylabel("weight")
    ax.set_xticks([])
    ax.set_title(f"Covers on codes of S_{hd.n} ({len(hd.nodes)} nodes, {len(hd.edges)} edges)")
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def plot_diagram(
    d: BoxDiagram | Composition,
    path: str | Path,
    path_row: Optional[int] = None,
    dpi: int = 150,
):
    """Boxes drawn with row 1 at the bottom; optionally overlays the c-path of ``path_row``."""
    alpha = d if isinstance(d, Composition) else None
    if alpha is not None:
        d = BoxDiagram.of(alpha)
    n = d.n
    fig, ax = plt.subplots(figsize=(0.5 * n + 1, 0.5 * n + 1))
    # staircase outline
    for r in range(1, n):
        for c in range(1, n - r + 1):
            ax.add_patch(Rectangle((c - 1, r - 1), 1, 1, fill=False, ec="0.85", lw=0.5))
    for r, row in enumerate(d.rows, start=1):
        for c in row:
            ax.add_patch(Rectangle((c - 1, r - 1), 1, 1, fc="#DCE9ED", ec="#708BA6", lw=1))
            ax.text(c - 0.5, r - 0.5, f"{r + c - 1}", ha="center", va="center", fontsize=7)
    if path_row is not None and alpha is not None:
        verts = c_path(alpha, path_row)
        ax.plot([c - 0.5 for _, c in verts], [r - 0.5 for r, _ in verts],
                color="#C0392B", lw=1.5, marker="o", ms=3)
    ax.set_xlim(-0.6 if path_row is not None else 0, max(n - 1, 1))
    ax.set_ylim(0, max(n, 1))
    ax.set_aspect("equal")
    ax.axis("off")
    title = str(alpha) if alpha is not None else f"diagram in C_{n}"
    if alpha is not None:
        title += f"  (weight {weight(alpha)})"
    ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
