"""Weighted factorization lengths in three-generator numerical semigroups."""
from .bounds import BoundReport, refined_bound, theorem_bound, verify_bound
from .core import (
    DirectionData,
    IntegerPointWitness,
    ResidueClass,
    WeightSystem,
    direction_data,
    integer_point,
    residue_class,
    validate,
)
from .enumeration import (
    Factorization,
    LatticeSegment,
    LengthMultiset,
    count_in_window,
    count_on_line,
    enumerate_factorizations,
    length_multiset,
    scaled_histogram,
    weighted_length,
)
from .geometry import (
    TriangleDensity,
    density_F,
    integrate_F,
    normalized_segment_length,
    segment_endpoints,
)
from .stats import StatsReport, empirical_stats, predicted_stats

__version__ = "0.1.0"
