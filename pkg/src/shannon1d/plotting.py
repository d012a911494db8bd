"""Rendering of figure datasets to image files.

Kept separate from the dataset computation so library users can consume
the columnar series without a plotting dependency in their import path.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .analysis import FigureData

_AXIS_LABELS = {
    "omega": ("angular frequency (a.u.)", "entropy (nats)"),
    "xc": ("confinement distance (a.u.)", "entropy (nats)"),
    "position": ("x (a.u.)", "probability density"),
    "momentum": ("p (a.u.)", "probability density"),
}


def render_figure(data: FigureData, path: str | Path) -> Path:
    """Draw every series of `data`, one subplot per panel, to `path`."""
    panels = list(dict.fromkeys(s.panel for s in data.series))
    fig, axes = plt.subplots(1, len(panels),
                             figsize=(6.0 * len(panels), 4.5), squeeze=False)
    for ax, panel in zip(axes[0], panels):
        for series in data.series:
            if series.panel == panel:
                ax.plot(series.x, series.y, label=series.label, linewidth=1.4)
        x_label, y_label = _AXIS_LABELS.get(panel, (panel, "value"))
        ax.set_xlabel(x_label)
        ax.set_ylabel(y_label)
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=8)
    fig.suptitle(data.description)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
