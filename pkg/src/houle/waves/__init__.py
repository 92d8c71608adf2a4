"""Shallow-water numerics: soliton integration and sea-state synthesis."""

from houle.waves.kdv import (
    BlowUpError,
    Grid1D,
    KdvState,
    StabilityError,
    integrate_to,
    kdv_invariants,
    kdv_step,
    max_stable_dt,
    soliton_profile,
)
from houle.waves.spectrum import (
    DirectionalSpectrum,
    SpectrumFormatError,
    cell_widths,
    load_bundled_spectrum,
    parse_spectrum,
    significant_height,
    spectral_moment_m0,
)
from houle.waves.field import (
    DISPLAY_MAX,
    GRAVITY,
    DisplayMatrix,
    HeightField,
    WaveComponentSet,
    evaluate_field,
    normalize_display,
    synthesize_components,
)

__all__ = [
    "BlowUpError",
    "Grid1D",
    "KdvState",
    "StabilityError",
    "integrate_to",
    "kdv_invariants",
    "kdv_step",
    "max_stable_dt",
    "soliton_profile",
    "DirectionalSpectrum",
    "SpectrumFormatError",
    "cell_widths",
    "load_bundled_spectrum",
    "parse_spectrum",
    "significant_height",
    "spectral_moment_m0",
    "DISPLAY_MAX",
    "GRAVITY",
    "DisplayMatrix",
    "HeightField",
    "WaveComponentSet",
    "evaluate_field",
    "normalize_display",
    "synthesize_components",
]
