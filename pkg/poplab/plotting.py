"""Plotting of counting sequences."""

import logging
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .config import PlottingConfig  # noqa: E402

logger = logging.getLogger(__name__)


def plot_sequences(
    sequences: Mapping[str, Sequence[int]],
    config: PlottingConfig,
    title: str = "",
) -> None:
    """Draw each sequence against n and save the figure.

    Args:
        sequences: Label -> values at n = 0, 1, ...
        config: Where to save and which scale to use.
        title: Figure title.

    Raises:
        ValueError: If plotting is enabled without a save path.
    """
    if not config.enabled:
        return
    if not config.save_path:
        raise ValueError("plotting needs a save path")

    fig, ax = plt.subplots(figsize=(8, 5))
    for label, values in sequences.items():
        ax.plot(range(len(values)), [float(v) for v in values], marker="o", label=label)
    if config.log_scale:
        ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    if title:
        ax.set_title(title)
    ax.legend()
    ax.grid(True, alpha=0.3)

    plt.tight_layout()
    plt.savefig(config.save_path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    logger.info("saved plot to %s", config.save_path)
