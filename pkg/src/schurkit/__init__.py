"""Exact Littlewood-Richardson coefficients, Schur plethysm, and positivity
pruning filters.

All arithmetic is exact (ints and fractions); diagrams follow the French
convention with points given as (column, row), both 0-indexed from the
bottom left.
"""

from .partitions import (
    InfiniteRegionError,
    Partition,
    Point,
    all_partitions,
    evaluation_nonzero,
    ideal_complement,
    minkowski_sum,
    outer_corners,
    partitions_of,
    point_in_diagram,
)
from .positivity import (
    BoundPair,
    enumerate_candidates,
    lr_bound,
    plethysm_filter_check,
    size_row_bound,
    sxp_lower_check,
    sxp_upper_bound,
    trivial_sign_multiplicity,
)
from .quotients import (
    NonEmptyCoreError,
    NotACoreError,
    PointInDiagramError,
    QuotientDecomposition,
    SignedTableau,
    canonical_ssyt,
    decompose,
    reconstruct,
    sxp_sign,
)
from .schur import (
    CharacterCache,
    NonIntegralResultError,
    PowerSumExpansion,
    SchurExpansion,
    character,
    lr_coefficient,
    multi_schur_product,
    power_to_schur,
    schur_plethysm,
    schur_product,
    schur_to_power,
    sxp_plethysm,
    z_of,
)

__version__ = "0.1.0"

__all__ = [
    "BoundPair",
    "CharacterCache",
    "InfiniteRegionError",
    "NonEmptyCoreError",
    "NonIntegralResultError",
    "NotACoreError",
    "Partition",
    "Point",
    "PointInDiagramError",
    "PowerSumExpansion",
    "QuotientDecomposition",
    "SchurExpansion",
    "SignedTableau",
    "all_partitions",
    "canonical_ssyt",
    "character",
    "decompose",
    "enumerate_candidates",
    "evaluation_nonzero",
    "ideal_complement",
    "lr_bound",
    "lr_coefficient",
    "minkowski_sum",
    "multi_schur_product",
    "outer_corners",
    "partitions_of",
    "plethysm_filter_check",
    "point_in_diagram",
    "power_to_schur",
    "reconstruct",
    "schur_plethysm",
    "schur_product",
    "schur_to_power",
    "size_row_bound",
    "sxp_lower_check",
    "sxp_plethysm",
    "sxp_sign",
    "sxp_upper_bound",
    "trivial_sign_multiplicity",
    "z_of",
]
