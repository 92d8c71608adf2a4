"""houle: deterministic generative graphics and ocean-wave numerics.

Five coordinated parts: seedable stochastics, pen-plotter style vector
graphics, shallow-water soliton and sea-state numerics, a discrete-event
simulation of a small compute grid that drifts out of sync as it heats, and
a catalog tool for algorithmic artworks.  Everything is reproducible down to
the byte for a given seed.
"""

from houle.stochastics import (
    DiscreteDistribution,
    RandomStream,
    Seed,
    UniformRange,
    rng_lane,
    rng_new,
    sample_discrete,
    sample_uniform,
    triangular_gray_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "DiscreteDistribution",
    "RandomStream",
    "Seed",
    "UniformRange",
    "rng_lane",
    "rng_new",
    "sample_discrete",
    "sample_uniform",
    "triangular_gray_distribution",
    "__version__",
]
