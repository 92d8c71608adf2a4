"""Directional wave spectra: file format, integration cells, moments.

A spectrum file is UTF-8 text with LF line endings:

    # comment lines and blank lines are ignored
    station: <free text>
    month: <YYYY-MM>
    hs_reported: <float> m        (optional)
    freqs_hz: f0 f1 ...           (strictly ascending)
    dirs_rad: d0 d1 ...           (strictly ascending)
    <one matrix row per frequency, one column per direction, m^2/(Hz rad)>

Integration uses midpoint cell widths: interior cells span between the
midpoints of neighbouring axis values, the two end cells take half-cells.
An axis with a single value gets a unit-width cell by convention, which
keeps degenerate spectra usable.  The same widths feed both the zeroth
moment and component-amplitude synthesis, so variance bookkeeping closes.
"""

from __future__ import annotations

import importlib.resources
import re
from dataclasses import dataclass

import numpy as np

BUNDLED_SPECTRUM = "pierres_noires_2014_02_synthetic.spec"

_MONTH_RE = re.compile(r"^\d{4}-(0[1-9]|1[0-2])$")


class SpectrumFormatError(ValueError):
    """Parse failure; message starts with the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class DirectionalSpectrum:
    """Energy density S(f, theta) on a rectangular (freq x direction) grid."""

    freqs: tuple[float, ...]
    dirs: tuple[float, ...]
    s: np.ndarray  # shape (len(freqs), len(dirs)), m^2/(Hz rad)
    station: str = ""
    month: str = ""
    hs_reported: float | None = None

    def __post_init__(self):
        s = np.asarray(self.s, dtype=np.float64)
        if s.shape != (len(self.freqs), len(self.dirs)):
            raise ValueError(
                f"matrix shape {s.shape} does not match "
                f"{len(self.freqs)} freqs x {len(self.dirs)} dirs"
            )
        for name, axis in (("freqs", self.freqs), ("dirs", self.dirs)):
            if not axis:
                raise ValueError(f"{name} axis is empty")
            if any(b <= a for a, b in zip(axis, axis[1:])):
                raise ValueError(f"{name} axis must be strictly ascending")
        if np.any(s < 0.0) or not np.all(np.isfinite(s)):
            raise ValueError("spectral densities must be finite and >= 0")
        object.__setattr__(self, "s", s)


def cell_widths(axis: tuple[float, ...]) -> np.ndarray:
    """Midpoint cell widths; half-cells at the ends; unit width for one value."""
    if len(axis) == 1:
        return np.array([1.0])
    a = np.asarray(axis, dtype=np.float64)
    w = np.empty(len(a))
    w[0] = (a[1] - a[0]) / 2.0
    w[-1] = (a[-1] - a[-2]) / 2.0
    if len(a) > 2:
        w[1:-1] = (a[2:] - a[:-2]) / 2.0
    return w


def spectral_moment_m0(sp: DirectionalSpectrum) -> float:
    """Zeroth moment: total variance in m^2."""
    df = cell_widths(sp.freqs)
    dd = cell_widths(sp.dirs)
    return float(np.einsum("ij,i,j->", sp.s, df, dd))


def significant_height(sp: DirectionalSpectrum) -> float:
    """Hs = 4 sqrt(m0), metres."""
    return 4.0 * float(np.sqrt(spectral_moment_m0(sp)))


def _parse_floats(line_no: int, label: str, text: str) -> tuple[float, ...]:
    parts = text.split()
    if not parts:
        raise SpectrumFormatError(line_no, f"{label} line has no values")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise SpectrumFormatError(line_no, f"{label} line has a non-numeric value")


def parse_spectrum(text: str) -> DirectionalSpectrum:
    """Parse the spectrum file format; errors carry 1-based line numbers."""
    station = None
    month = None
    hs_reported = None
    freqs: tuple[float, ...] | None = None
    dirs: tuple[float, ...] | None = None
    rows: list[tuple[float, ...]] = []
    row_lines: list[int] = []

    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if freqs is not None and dirs is not None:
            values = _parse_floats(line_no, "matrix", line)
            rows.append(values)
            row_lines.append(line_no)
            continue
        if ":" not in line:
            raise SpectrumFormatError(line_no, f"malformed header line: {line!r}")
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key == "station":
            station = value
        elif key == "month":
            if not _MONTH_RE.match(value):
                raise SpectrumFormatError(line_no, f"month must be YYYY-MM, got {value!r}")
            month = value
        elif key == "hs_reported":
            m = re.fullmatch(r"([-+0-9.eE]+)\s*m", value)
            if not m:
                raise SpectrumFormatError(
                    line_no, f"hs_reported must be '<float> m', got {value!r}"
                )
            hs_reported = float(m.group(1))
        elif key == "freqs_hz":
            freqs = _parse_floats(line_no, "freqs_hz", value)
            if any(b <= a for a, b in zip(freqs, freqs[1:])):
                raise SpectrumFormatError(line_no, "freqs_hz must be strictly ascending")
        elif key == "dirs_rad":
            if freqs is None:
                raise SpectrumFormatError(line_no, "dirs_rad given before freqs_hz")
            dirs = _parse_floats(line_no, "dirs_rad", value)
            if any(b <= a for a, b in zip(dirs, dirs[1:])):
                raise SpectrumFormatError(line_no, "dirs_rad must be strictly ascending")
        else:
            raise SpectrumFormatError(line_no, f"unknown header key {key!r}")

    if station is None:
        raise SpectrumFormatError(1, "missing 'station' header")
    if month is None:
        raise SpectrumFormatError(1, "missing 'month' header")
    if freqs is None or dirs is None:
        raise SpectrumFormatError(1, "missing freqs_hz/dirs_rad axes")
    if len(rows) != len(freqs):
        raise SpectrumFormatError(
            row_lines[-1] if row_lines else 1,
            f"expected {len(freqs)} matrix rows, got {len(rows)}",
        )
    for idx, (values, line_no) in enumerate(zip(rows, row_lines)):
        if len(values) != len(dirs):
            raise SpectrumFormatError(
                line_no,
                f"matrix row {idx} has {len(values)} values, expected {len(dirs)}",
            )
        if any(v < 0.0 for v in values):
            raise SpectrumFormatError(line_no, f"matrix row {idx} has a negative density")

    return DirectionalSpectrum(
        freqs=freqs,
        dirs=dirs,
        s=np.array(rows, dtype=np.float64),
        station=station,
        month=month,
        hs_reported=hs_reported,
    )


def load_bundled_spectrum() -> DirectionalSpectrum:
    """The synthetic February-2014 Atlantic storm spectrum shipped as data."""
    text = (
        importlib.resources.files("houle.data")
        .joinpath(BUNDLED_SPECTRUM)
        .read_text(encoding="utf-8")
    )
    return parse_spectrum(text)
