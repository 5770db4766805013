"""Planar arrays and frequency-dependent array responses.

Element positions are fixed in meters when an array is built, while the
phase accumulated per meter grows linearly with frequency.  A weight vector
aligned at one frequency therefore drifts out of alignment elsewhere in the
band; every squint result downstream traces back to that fact.

Conventions, fixed so outputs reproduce bit for bit:
  * the element grid is indexed row-major with element (0, 0) as the zero-
    phase reference (any other reference differs by a global phase that no
    gain metric observes);
  * direction cosines are k_h = sin(azimuth)*cos(elevation) horizontally
    and k_v = sin(elevation) vertically;
  * the response entry for grid position (m, n) at frequency f is
    exp(j * 2*pi * (f/c) * spacing * (n*k_h + m*k_v)).

Path gains are frequency-flat complex amplitudes: all frequency dependence
of a multipath channel lives in the array response, with no per-path delay
phase across the band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT_M_S = 299792458.0


@dataclass(frozen=True)
class Direction:
    """Arrival/departure direction relative to array boresight, radians."""

    azimuth_rad: float
    elevation_rad: float

    def __post_init__(self):
        if not -math.pi < self.azimuth_rad <= math.pi:
            raise ValueError(f"azimuth_rad must lie in (-pi, pi], got {self.azimuth_rad}")
        if not -math.pi / 2 <= self.elevation_rad <= math.pi / 2:
            raise ValueError(
                f"elevation_rad must lie in [-pi/2, pi/2], got {self.elevation_rad}"
            )

    def cosines(self) -> tuple[float, float]:
        """Horizontal and vertical direction cosines (k_h, k_v)."""
        k_h = math.sin(self.azimuth_rad) * math.cos(self.elevation_rad)
        k_v = math.sin(self.elevation_rad)
        return k_h, k_v


@dataclass(frozen=True)
class PlanarArray:
    """Rectangular grid of rows x cols isotropic elements, spacing in meters.

    The spacing is chosen once (typically half a wavelength at the design
    frequency) and never rescales with the evaluation frequency.
    """

    rows: int
    cols: int
    spacing_m: float
    design_frequency_hz: float

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"array needs rows >= 1 and cols >= 1, got {self.rows}x{self.cols}")
        if self.spacing_m <= 0:
            raise ValueError(f"spacing_m must be positive, got {self.spacing_m}")
        if self.design_frequency_hz <= 0:
            raise ValueError(
                f"design_frequency_hz must be positive, got {self.design_frequency_hz}"
            )

    @property
    def num_elements(self) -> int:
        return self.rows * self.cols

    @classmethod
    def half_wavelength_at(cls, rows: int, cols: int, frequency_hz: float) -> "PlanarArray":
        """Array spaced at c/(2f) for the given design frequency."""
        if frequency_hz <= 0:
            raise ValueError(f"frequency_hz must be positive, got {frequency_hz}")
        return cls(rows, cols, SPEED_OF_LIGHT_M_S / (2.0 * frequency_hz), frequency_hz)


@dataclass(frozen=True, eq=False)
class ArrayResponse:
    """Unit-modulus response entries of one array at one frequency."""

    entries: np.ndarray
    frequency_hz: float

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if self.frequency_hz <= 0:
            raise ValueError(f"frequency_hz must be positive, got {self.frequency_hz}")
        if np.max(np.abs(np.abs(entries) - 1.0)) > 1e-12:
            raise ValueError("array response entries must have unit magnitude")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return self.entries.size


@dataclass(frozen=True)
class Path:
    """One propagation path: frequency-flat complex gain plus a direction."""

    gain: complex
    direction: Direction

    def __post_init__(self):
        object.__setattr__(self, "gain", complex(self.gain))


@dataclass(frozen=True, eq=False)
class MultipathChannel:
    """Ordered, non-empty collection of paths with positive total power."""

    paths: tuple[Path, ...]

    def __post_init__(self):
        paths = tuple(self.paths)
        if not paths:
            raise ValueError("a multipath channel needs at least one path")
        if sum(abs(p.gain) ** 2 for p in paths) <= 0.0:
            raise ValueError("total path power must be positive")
        object.__setattr__(self, "paths", paths)

    @property
    def total_power(self) -> float:
        return sum(abs(p.gain) ** 2 for p in self.paths)


def array_response(array: PlanarArray, direction: Direction, frequency_hz: float) -> ArrayResponse:
    """Response of ``array`` toward ``direction`` evaluated at ``frequency_hz``.

    Entry for grid position (m, n) is exp(j*2*pi*(f/c)*spacing*(n*k_h + m*k_v))
    with the grid flattened row-major.  Purely deterministic.
    """
    if frequency_hz <= 0:
        raise ValueError(f"frequency_hz must be positive, got {frequency_hz}")
    k_h, k_v = direction.cosines()
    m = np.arange(array.rows)[:, None]
    n = np.arange(array.cols)[None, :]
    phase = 2.0 * np.pi * (frequency_hz / SPEED_OF_LIGHT_M_S) * array.spacing_m * (
        n * k_h + m * k_v
    )
    return ArrayResponse(np.exp(1j * phase).ravel(), frequency_hz)


def channel_vector(array: PlanarArray, channel: MultipathChannel, frequency_hz: float) -> np.ndarray:
    """Channel vector h(f) = sum of gain_l * response(direction_l, f) over paths."""
    h = np.zeros(array.num_elements, dtype=complex)
    for path in channel.paths:
        h += path.gain * array_response(array, path.direction, frequency_hz).entries
    return h
