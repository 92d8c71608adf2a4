"""Wave-field synthesis from a directional spectrum, plus display scaling.

Each spectral cell (i, j) becomes one linear deep-water component with

    amplitude a_ij = sqrt(2 * S[i][j] * df_i * dθ_j)
    omega          = 2 pi f_i
    wavenumber k   = omega^2 / g          (deep water)
    phase          uniform in [0, 2 pi), one draw per cell, row-major

and the surface elevation at a grid point is the plain sum

    h = sum a_ij cos(k (x cos θ + y sin θ) - omega t + phase)

accumulated in row-major component order so repeated evaluations are
bit-identical.  Heights are metres; display values are integers scaled so
that h == h_ref maps to exactly 999999 (the display's six digits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from houle.stochastics import RandomStream
from houle.waves.spectrum import DirectionalSpectrum, cell_widths

GRAVITY = 9.81  # m/s^2
DISPLAY_MAX = 999_999

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class WaveComponentSet:
    """Flat component arrays, one entry per spectral cell, row-major."""

    amplitude: np.ndarray
    omega: np.ndarray
    wavenumber: np.ndarray
    direction: np.ndarray
    phase: np.ndarray

    def __post_init__(self):
        n = len(self.amplitude)
        for name in ("omega", "wavenumber", "direction", "phase"):
            if len(getattr(self, name)) != n:
                raise ValueError("component arrays must share one length")

    def __len__(self) -> int:
        return len(self.amplitude)


@dataclass(frozen=True)
class HeightField:
    """Surface elevation snapshot on a rows x cols grid (metres)."""

    h: np.ndarray
    spacing: float
    t: float

    def __post_init__(self):
        h = np.asarray(self.h, dtype=np.float64)
        if h.ndim != 2:
            raise ValueError("height field must be 2-D")
        object.__setattr__(self, "h", h)

    @property
    def rows(self) -> int:
        return self.h.shape[0]

    @property
    def cols(self) -> int:
        return self.h.shape[1]


@dataclass(frozen=True)
class DisplayMatrix:
    """Integer display values plus the metres-per-unit scale used to get them."""

    values: np.ndarray
    scale: float

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.ndim != 2 or not np.issubdtype(v.dtype, np.integer):
            raise ValueError("display values must be a 2-D integer matrix")
        object.__setattr__(self, "values", v)


def synthesize_components(
    sp: DirectionalSpectrum, stream: RandomStream
) -> WaveComponentSet:
    """One component per spectral cell; phases drawn row-major, one per cell."""
    df = cell_widths(sp.freqs)
    dd = cell_widths(sp.dirs)
    nf, nd = len(sp.freqs), len(sp.dirs)
    amplitude = np.sqrt(2.0 * sp.s * df[:, None] * dd[None, :]).ravel()
    omega = np.repeat(TWO_PI * np.asarray(sp.freqs), nd)
    wavenumber = omega**2 / GRAVITY
    direction = np.tile(np.asarray(sp.dirs), nf)
    phase = np.array(
        [TWO_PI * stream.next_float() for _ in range(nf * nd)], dtype=np.float64
    )
    return WaveComponentSet(amplitude, omega, wavenumber, direction, phase)


def evaluate_field(
    cs: WaveComponentSet,
    rows: int,
    cols: int,
    spacing: float,
    t: float,
    row_offset: int = 0,
) -> HeightField:
    """Elevation at grid points x = col * spacing, y = (row_offset+row) * spacing.

    The component sum is accumulated in the set's row-major order; the same
    inputs always produce the bit-identical matrix.  `row_offset` lets a
    worker evaluate its band of a larger grid without changing the result.
    """
    if rows < 1 or cols < 1:
        raise ValueError("field needs at least one row and one column")
    if spacing <= 0.0:
        raise ValueError("grid spacing must be positive")
    x = np.arange(cols) * spacing
    y = (row_offset + np.arange(rows)) * spacing
    kx = cs.wavenumber * np.cos(cs.direction)
    ky = cs.wavenumber * np.sin(cs.direction)
    shift = cs.phase - cs.omega * t
    # phase[m, r, c] = kx[m] x[c] + ky[m] y[r] + shift[m]
    arg = (
        kx[:, None, None] * x[None, None, :]
        + ky[:, None, None] * y[None, :, None]
        + shift[:, None, None]
    )
    h = np.einsum("m,mrc->rc", cs.amplitude, np.cos(arg))
    return HeightField(h, spacing=spacing, t=t)


def evaluate_point_series(
    cs: WaveComponentSet, x: float, y: float, times: np.ndarray
) -> np.ndarray:
    """Elevation time series at one point, same summation order as the field."""
    times = np.asarray(times, dtype=np.float64)
    space = cs.wavenumber * (x * np.cos(cs.direction) + y * np.sin(cs.direction))
    arg = (space + cs.phase)[:, None] - cs.omega[:, None] * times[None, :]
    return np.einsum("m,mt->t", cs.amplitude, np.cos(arg))


def normalize_display(hf: HeightField, h_ref: float) -> DisplayMatrix:
    """Map heights to integers: round(h / h_ref * 999999), clamped to 6 digits.

    Monotone in h, odd around zero, and exact at the reference: h == h_ref
    gives 999999.  Rounding is to nearest (ties to even), then the value is
    clamped to [-999999, 999999].
    """
    if h_ref <= 0.0:
        raise ValueError("h_ref must be positive")
    raw = np.rint(hf.h / h_ref * DISPLAY_MAX)
    clamped = np.clip(raw, -DISPLAY_MAX, DISPLAY_MAX).astype(np.int64)
    return DisplayMatrix(clamped, scale=h_ref / DISPLAY_MAX)
