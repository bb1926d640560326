"""Static figures for verification reports (matplotlib, non-interactive backend)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .catalog import Report  # noqa: E402
from .serialize import PatchExport  # noqa: E402


def plot_bound_saturation(reports: list[Report], path: str | Path) -> Path:
    """Group order against genus for each verified instance, over the line ``12(g-1)``."""
    done = [r for r in reports if not r.skipped and r.computed.get("genus") is not None]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    gmax = max((r.computed["genus"] for r in done), default=3)
    ax.plot([2, gmax], [12, 12 * (gmax - 1)], color="0.4", lw=1, label="12(g−1)")
    for tag in dict.fromkeys(r.tag for r in done):
        pts = [(r.computed["genus"], r.computed["order"]) for r in done if r.tag == tag]
        ax.scatter(*zip(*pts), s=18, label=tag)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("genus g")
    ax.set_ylabel("|G|")
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_patch(patch: PatchExport, path: str | Path) -> Path:
    fig = plt.figure(figsize=(5, 5))
    ax = fig.add_subplot(projection="3d")
    pts = [tuple(float(c) for c in v) for v in patch.cartesian()]
    for i, j in patch.segments:
        (x0, y0, z0), (x1, y1, z1) = pts[i], pts[j]
        ax.plot([x0, x1], [y0, y1], [z0, z1], color="k", lw=1)
    ax.set_title(f"{patch.family}, box {patch.box}")
    path = Path(path)
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
