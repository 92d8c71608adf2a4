"""Reference values and properties for the deterministic random streams.

The u64 sequences below were frozen at bring-up; the seed-0 sequence also
matches the published test vectors for this mixing function, which pins the
implementation to the intended generator rather than to itself.
"""

import math

import pytest
from hypothesis import given, strategies as st

from houle.stochastics import (
    DiscreteDistribution,
    UniformRange,
    rng_lane,
    rng_new,
    sample_discrete,
    sample_uniform,
    triangular_gray_distribution,
)

SEQ_SEED0 = (
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
)
SEQ_SEED42 = (
    0xBDD732262FEB6E95,
    0x28EFE333B266F103,
    0x47526757130F9F52,
    0x581CE1FF0E4AE394,
)
SEQ_SEED43 = (
    0xBA69EC90EB4FEF88,
    0x9CDE98852E60034B,
    0x6EC624AA85685867,
    0xD49FFE504BFDAB7F,
)
FLOATS_SEED42 = (0.7415648787718233, 0.1599103928769201, 0.27860113025513866)


def test_reference_u64_sequences():
    for seed, expected in ((0, SEQ_SEED0), (42, SEQ_SEED42), (43, SEQ_SEED43)):
        stream = rng_new(seed)
        assert tuple(stream.next_u64() for _ in range(4)) == expected


def test_nearby_seeds_diverge_immediately():
    assert rng_new(42).next_u64() != rng_new(43).next_u64()


def test_reference_floats():
    stream = rng_new(42)
    got = tuple(stream.next_float() for _ in range(3))
    assert got == FLOATS_SEED42


def test_float_mean_reference():
    stream = rng_new(123)
    mean = math.fsum(stream.next_float() for _ in range(100_000)) / 100_000
    assert mean == pytest.approx(0.5004466417916692, abs=1e-15)


def test_lane_streams():
    assert rng_lane(7, 0).next_u64() == 0x7B39ACA7052047DA
    assert rng_lane(7, 1).next_u64() == 0x8A4C4226689B5082
    with pytest.raises(ValueError):
        rng_lane(7, -1)


def test_lane_zero_differs_from_root():
    assert rng_lane(7, 0).next_u64() != rng_new(7).next_u64()


@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_u64_range(seed):
    stream = rng_new(seed)
    for _ in range(8):
        assert 0 <= stream.next_u64() < 2**64


@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_float_unit_interval(seed):
    stream = rng_new(seed)
    for _ in range(8):
        assert 0.0 <= stream.next_float() < 1.0


@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=0, max_value=64))
def test_same_seed_same_sequence(seed, n):
    a, b = rng_new(seed), rng_new(seed)
    assert [a.next_u64() for _ in range(n)] == [b.next_u64() for _ in range(n)]


class TestUniformRange:
    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValueError):
            UniformRange(2.0, 1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            UniformRange(0.0, math.inf)

    def test_point_range_returns_lo(self):
        stream = rng_new(0)
        assert sample_uniform(stream, UniformRange(3.5, 3.5)) == 3.5

    def test_reference_draws(self):
        stream = rng_new(42)
        r = UniformRange(-3.0, 5.0)
        got = [sample_uniform(stream, r) for _ in range(3)]
        assert got == [
            2.9325190301745865,
            -1.7207168569846392,
            -0.7711909579588907,
        ]

    def test_one_advance_per_draw(self):
        a, b = rng_new(9), rng_new(9)
        sample_uniform(a, UniformRange(0.0, 1.0))
        b.next_u64()
        assert a.next_u64() == b.next_u64()

    @given(
        st.floats(-1e6, 1e6),
        st.floats(0.0, 1e6),
        st.integers(min_value=0, max_value=2**32),
    )
    def test_draws_stay_in_range(self, lo, width, seed):
        r = UniformRange(lo, lo + width)
        stream = rng_new(seed)
        for _ in range(4):
            v = sample_uniform(stream, r)
            assert r.lo <= v <= r.hi


class TestDiscreteDistribution:
    def test_rejects_empty_and_negative_and_zero(self):
        with pytest.raises(ValueError):
            DiscreteDistribution(())
        with pytest.raises(ValueError):
            DiscreteDistribution((0.5, -0.1))
        with pytest.raises(ValueError):
            DiscreteDistribution((0.0, 0.0))

    def test_rejects_outcome_length_mismatch(self):
        with pytest.raises(ValueError):
            DiscreteDistribution((1.0, 1.0), outcomes=(1,))

    def test_weights_normalized(self):
        d = DiscreteDistribution((2.0, 6.0))
        assert d.weights == (0.25, 0.75)

    def test_default_outcomes_are_indices(self):
        d = DiscreteDistribution((1.0, 1.0, 1.0))
        assert d.outcomes == (0, 1, 2)

    def test_one_advance_per_draw(self):
        d = DiscreteDistribution((0.3, 0.7))
        a, b = rng_new(11), rng_new(11)
        sample_discrete(a, d)
        b.next_u64()
        assert a.next_u64() == b.next_u64()

    def test_zero_weight_outcome_unreachable(self):
        d = DiscreteDistribution((0.5, 0.0, 0.5))
        stream = rng_new(3)
        drawn = {sample_discrete(stream, d) for _ in range(2000)}
        assert 1 not in drawn

    @given(st.integers(min_value=0, max_value=2**32))
    def test_single_outcome_always_drawn(self, seed):
        d = DiscreteDistribution((5.0,), outcomes=("only",))
        idx = sample_discrete(rng_new(seed), d)
        assert d.outcomes[idx] == "only"

    @given(
        st.lists(st.floats(0.0, 100.0), min_size=1, max_size=8).filter(
            lambda w: sum(w) > 0.0
        ),
        st.integers(min_value=0, max_value=2**32),
    )
    def test_only_positive_weight_indices(self, weights, seed):
        d = DiscreteDistribution(tuple(weights))
        stream = rng_new(seed)
        for _ in range(8):
            idx = sample_discrete(stream, d)
            assert d.weights[idx] > 0.0


class TestTriangularGray:
    def test_three_levels(self):
        assert triangular_gray_distribution(3).weights == (0.25, 0.5, 0.25)

    def test_four_levels(self):
        assert triangular_gray_distribution(4).weights == (
            0.1875,
            0.3125,
            0.3125,
            0.1875,
        )

    def test_five_levels(self):
        w = triangular_gray_distribution(5).weights
        assert w == tuple(n / 9 for n in (1, 2, 3, 2, 1))

    def test_symmetry_and_mode(self):
        for levels in range(3, 12):
            w = triangular_gray_distribution(levels).weights
            assert w == w[::-1]
            assert max(w) == w[len(w) // 2]

    def test_rejects_fewer_than_three(self):
        with pytest.raises(ValueError):
            triangular_gray_distribution(2)

    def test_empirical_l1_convergence(self):
        d = triangular_gray_distribution(5)
        stream = rng_new(7)
        counts = [0] * 5
        n = 100_000
        for _ in range(n):
            counts[sample_discrete(stream, d)] += 1
        l1 = sum(abs(c / n - w) for c, w in zip(counts, d.weights))
        assert l1 < 0.02
