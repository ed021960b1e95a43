"""Configuration classes for a poplab run."""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

FORMATS = ("plain", "json", "csv")


@dataclass
class PlottingConfig:
    """Configuration for sequence plotting.

    Args:
        enabled: Whether to render a plot
        save_path: File to write the figure to. Plotting is enabled exactly when
            this is set.
        log_scale: Use a logarithmic y axis
    """

    enabled: bool = False
    save_path: Optional[str] = None
    log_scale: bool = True


@dataclass
class RunConfig:
    """Everything one CLI invocation needs.

    Args:
        subcommand: One of count, distribution, recurrence, verify, kfib, series.
        n: Length for single-length queries.
        n_max: Largest length for sequence queries and verification.
        pops: POP specifications as typed on the command line.
        separable: Restrict to separable permutations.
        banded: Window slack (a, b).
        pair: Flat-POP sizes (j, l).
        system: Use the solved system instead of the explicit g.f.
        seq: Literal sequence for recurrence discovery.
        terms: Number of terms for recurrence discovery.
        order: Series truncation order.
        ones: Print univariate coefficients (all statistic variables set to 1).
        k: k for k-Fibonacci numbers.
        claims: Claim names for verify.
        all_claims: Verify every registered claim.
        fmt: Output format, one of plain, json, csv.
        jobs: Worker processes for enumeration.
        max_n: Enumeration cap override; requires ``allow_large``.
        allow_large: Acknowledges a raised cap.
        log_level: Logging level name for stderr diagnostics.
        plotting: Plot settings for sequence output.
    """

    subcommand: str
    n: Optional[int] = None
    n_max: Optional[int] = None
    pops: List[str] = field(default_factory=list)
    separable: bool = False
    banded: Optional[Tuple[int, int]] = None
    pair: Optional[Tuple[int, int]] = None
    system: bool = False
    seq: Optional[List[int]] = None
    terms: int = 12
    order: int = 10
    ones: bool = False
    k: Optional[int] = None
    claims: List[str] = field(default_factory=list)
    all_claims: bool = False
    fmt: str = "plain"
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    max_n: Optional[int] = None
    allow_large: bool = False
    log_level: str = "WARNING"
    plotting: PlottingConfig = field(default_factory=PlottingConfig)

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(
                f"format must be one of {', '.join(FORMATS)}, got {self.fmt!r}"
            )
        if self.max_n is not None and not self.allow_large:
            raise ValueError(
                "--max-n raises the enumeration cap and needs --allow-large"
            )
        if self.banded is not None and (self.pops or self.separable):
            raise ValueError("--banded cannot be combined with --pops or --separable")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}")
        for name in ("n", "n_max", "max_n"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfig:
        """Build a config from parsed arguments; absent options keep defaults."""
        values = {
            name: getattr(ns, name)
            for name in cls.__dataclass_fields__
            if name != "plotting" and getattr(ns, name, None) is not None
        }
        plot_path = getattr(ns, "plot", None)
        values["plotting"] = PlottingConfig(
            enabled=plot_path is not None,
            save_path=plot_path,
            log_scale=not getattr(ns, "linear", False),
        )
        return cls(**values)
