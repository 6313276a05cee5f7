"""Physical parameters, uniform time grids, and oscillator conventions.

Default natural units hbar = m = 1 with omega dimensionless, but every
constant stays an explicit field so SI-like values work unchanged.  All
values are immutable after construction and every operation is pure.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["PhysicalParams", "TimeGrid", "ladder_factor", "grid_times"]


@dataclass(frozen=True)
class PhysicalParams:
    """Two identical oscillators: mass, shared eigenfrequency, coupling charge.

    The fields fix every matrix element of the problem.  ``charge`` sets
    the scale of the separation-driven coupling e^2/s^3 and is not used
    by purely analytic profiles.
    """

    mass: float
    omega: float
    charge: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("mass", "omega", "charge", "hbar"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be finite and positive, got {value!r}")


def ladder_factor(params: PhysicalParams) -> float:
    """Squared length scale b = hbar/(2 m omega) of position matrix elements."""
    return params.hbar / (2.0 * params.mass * params.omega)


@dataclass(frozen=True)
class TimeGrid:
    """Uniformly spaced time samples; the only sampling the quadratures accept."""

    t_start: float
    t_end: float
    n_samples: int

    def __post_init__(self):
        if int(self.n_samples) != self.n_samples or self.n_samples < 2:
            raise ValueError(f"n_samples must be an integer >= 2, got {self.n_samples!r}")
        if not (np.isfinite(self.t_start) and np.isfinite(self.t_end)):
            raise ValueError("grid endpoints must be finite")
        if not self.t_end > self.t_start:
            raise ValueError(f"need t_end > t_start, got [{self.t_start}, {self.t_end}]")

    @property
    def dt(self) -> float:
        return (self.t_end - self.t_start) / (self.n_samples - 1)

    @property
    def span(self) -> float:
        return self.t_end - self.t_start

    def times(self) -> np.ndarray:
        """All sample times; first is exactly t_start, last exactly t_end."""
        return np.linspace(self.t_start, self.t_end, self.n_samples)


def grid_times(grid: TimeGrid) -> np.ndarray:
    """Sample times of ``grid`` (uniform spacing, endpoints included)."""
    return grid.times()
