"""Directional spectrum parsing, integration cells, and moments."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from houle.waves.spectrum import (
    DirectionalSpectrum,
    SpectrumFormatError,
    cell_widths,
    load_bundled_spectrum,
    parse_spectrum,
    significant_height,
    spectral_moment_m0,
)

MINIMAL = """\
station: Test Buoy
month: 2020-01
freqs_hz: 0.1 0.6
dirs_rad: 0.0 1.0
2.0 2.0
2.0 2.0
"""


class TestCellWidths:
    def test_single_value_gets_unit_cell(self):
        assert cell_widths((0.25,)).tolist() == [1.0]

    def test_two_values_split_the_span(self):
        assert cell_widths((0.1, 0.6)).tolist() == [0.25, 0.25]

    def test_uniform_axis_half_cells_at_ends(self):
        w = cell_widths((0.0, 1.0, 2.0, 3.0))
        assert w.tolist() == [0.5, 1.0, 1.0, 0.5]

    def test_nonuniform_axis_uses_midpoints(self):
        w = cell_widths((0.0, 1.0, 4.0))
        assert w.tolist() == [0.5, 2.0, 1.5]

    @given(
        st.lists(
            st.floats(0.01, 100.0, allow_nan=False),
            min_size=2,
            max_size=30,
            unique=True,
        )
    )
    @settings(max_examples=100)
    def test_widths_sum_to_span(self, values):
        axis = tuple(sorted(values))
        total = math.fsum(cell_widths(axis))
        assert total == pytest.approx(axis[-1] - axis[0], rel=1e-12, abs=1e-12)


class TestDirectionalSpectrum:
    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            DirectionalSpectrum((0.1, 0.2), (0.0,), np.zeros((1, 1)))

    def test_rejects_empty_axis(self):
        with pytest.raises(ValueError):
            DirectionalSpectrum((), (0.0,), np.zeros((0, 1)))

    def test_rejects_descending_axis(self):
        with pytest.raises(ValueError):
            DirectionalSpectrum((0.2, 0.1), (0.0,), np.zeros((2, 1)))

    def test_rejects_negative_density(self):
        with pytest.raises(ValueError):
            DirectionalSpectrum((0.1,), (0.0,), np.array([[-1.0]]))

    def test_rejects_nonfinite_density(self):
        with pytest.raises(ValueError):
            DirectionalSpectrum((0.1,), (0.0,), np.array([[float("inf")]]))


class TestMoments:
    def test_flat_two_by_two_example(self):
        # S = 2 over a 0.5 Hz x 1.0 rad patch: m0 = 2 * 0.5 * 1.0 = 1.
        sp = parse_spectrum(MINIMAL)
        assert spectral_moment_m0(sp) == pytest.approx(1.0)
        assert significant_height(sp) == pytest.approx(4.0)

    def test_single_cell_spectrum(self):
        sp = DirectionalSpectrum((0.1,), (0.0,), np.array([[3.0]]))
        assert spectral_moment_m0(sp) == pytest.approx(3.0)  # unit cell widths

    def test_zero_spectrum(self):
        sp = DirectionalSpectrum((0.1, 0.2), (0.0, 1.0), np.zeros((2, 2)))
        assert spectral_moment_m0(sp) == 0.0
        assert significant_height(sp) == 0.0


class TestParser:
    def test_minimal_roundtrip_fields(self):
        sp = parse_spectrum(MINIMAL)
        assert sp.station == "Test Buoy"
        assert sp.month == "2020-01"
        assert sp.hs_reported is None
        assert sp.freqs == (0.1, 0.6)
        assert sp.dirs == (0.0, 1.0)
        assert np.array_equal(sp.s, np.full((2, 2), 2.0))

    def test_comments_and_blank_lines_ignored(self):
        text = "# header\n\n" + MINIMAL.replace(
            "dirs_rad", "# mid comment\ndirs_rad"
        )
        sp = parse_spectrum(text)
        assert sp.freqs == (0.1, 0.6)

    def test_hs_reported_with_unit(self):
        text = MINIMAL.replace("month: 2020-01", "month: 2020-01\nhs_reported: 4.0 m")
        assert parse_spectrum(text).hs_reported == 4.0

    @pytest.mark.parametrize(
        "mutate, bad_line",
        [
            (lambda t: t.replace("station: Test Buoy", "who: Test Buoy"), 1),
            (lambda t: t.replace("month: 2020-01", "month: 2020-13"), 2),
            (lambda t: t.replace("month: 2020-01", "month 2020-01"), 2),
            (lambda t: t.replace("freqs_hz: 0.1 0.6", "freqs_hz: 0.6 0.1"), 3),
            (lambda t: t.replace("dirs_rad: 0.0 1.0", "dirs_rad: 1.0 1.0"), 4),
            (lambda t: t.replace("2.0 2.0\n2.0 2.0", "2.0 x\n2.0 2.0"), 5),
            (lambda t: t.replace("2.0 2.0\n2.0 2.0", "2.0 2.0 2.0\n2.0 2.0"), 5),
            (lambda t: t.replace("2.0 2.0\n2.0 2.0", "2.0 -2.0\n2.0 2.0"), 5),
            (lambda t: t.replace("2.0 2.0\n2.0 2.0", "2.0 2.0"), 5),
        ],
    )
    def test_errors_carry_line_numbers(self, mutate, bad_line):
        with pytest.raises(SpectrumFormatError) as exc:
            parse_spectrum(mutate(MINIMAL))
        assert exc.value.line == bad_line

    def test_dirs_before_freqs_rejected(self):
        text = (
            "station: S\nmonth: 2020-01\n"
            "dirs_rad: 0.0 1.0\nfreqs_hz: 0.1 0.6\n2.0 2.0\n2.0 2.0\n"
        )
        with pytest.raises(SpectrumFormatError) as exc:
            parse_spectrum(text)
        assert exc.value.line == 3

    @pytest.mark.parametrize(
        "drop",
        ["station: Test Buoy\n", "month: 2020-01\n", "freqs_hz: 0.1 0.6\n"],
    )
    def test_missing_required_header(self, drop):
        with pytest.raises(SpectrumFormatError):
            parse_spectrum(MINIMAL.replace(drop, ""))

    def test_hs_without_unit_rejected(self):
        text = MINIMAL.replace("month: 2020-01", "month: 2020-01\nhs_reported: 4.0")
        with pytest.raises(SpectrumFormatError) as exc:
            parse_spectrum(text)
        assert exc.value.line == 3


class TestBundledSpectrum:
    def test_header_fields(self):
        sp = load_bundled_spectrum()
        assert sp.station == "Les Pierres Noires (synthetic)"
        assert sp.month == "2014-02"
        assert sp.hs_reported == 9.9

    def test_grid_shape(self):
        sp = load_bundled_spectrum()
        assert len(sp.freqs) == 16
        assert len(sp.dirs) == 16
        assert sp.s.shape == (16, 16)
        assert sp.freqs[0] == 0.05
        assert sp.freqs[-1] == pytest.approx(0.20)
        assert sp.dirs[0] == 0.0
        assert sp.dirs[-1] == pytest.approx(2.0 * math.pi * 15 / 16)

    def test_all_cells_positive(self):
        sp = load_bundled_spectrum()
        assert np.all(sp.s > 0.0)

    def test_height_consistent_with_reported(self):
        sp = load_bundled_spectrum()
        hs = significant_height(sp)
        assert abs(hs - sp.hs_reported) / sp.hs_reported < 0.02
        # frozen value for this exact file
        assert spectral_moment_m0(sp) == pytest.approx(6.125623785944825, rel=1e-12)
