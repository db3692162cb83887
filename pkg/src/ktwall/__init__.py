"""Exact wall-and-chamber computations for the one-parameter family of
stability conditions on Picard-rank-one K3 and abelian surfaces."""

from .charge import (
    ChargeKind,
    ChargeParams,
    ChargeValue,
    ObjectClass,
    Ordering,
    central_charge,
    charge_line,
    slope_compare,
    slope_function_floor,
    verify_positivity,
)
from .geography import (
    FlopRecord,
    example_threshold,
    flop_count,
    flop_count_formula,
    flop_sequence,
    pd_geometry,
    stable_pairs_ambient,
    vanishing_max_length,
    vanishing_wall_positive,
    very_ample,
)
from .lattice import (
    CharVector,
    SurfaceData,
    SurfaceKind,
    bg_bound,
    euler_pairing,
    make_surface,
    moduli_dimension,
    sharp_bound,
    target_class,
)
from .walls import (
    PROPORTIONAL,
    Chamber,
    ChamberReport,
    HigherRank,
    Pairwise,
    RankOne,
    Wall,
    chamber_decomposition,
    destabilizer_candidates,
    higher_rank_floor,
    higher_rank_walls,
    ideal_sheaf_class,
    oracle_walls,
    pair_wall,
    rank_one_wall_value,
    rank_one_walls,
    rank_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "CharVector",
    "Chamber",
    "ChamberReport",
    "ChargeKind",
    "ChargeParams",
    "ChargeValue",
    "FlopRecord",
    "HigherRank",
    "ObjectClass",
    "Ordering",
    "PROPORTIONAL",
    "Pairwise",
    "RankOne",
    "SurfaceData",
    "SurfaceKind",
    "Wall",
    "bg_bound",
    "central_charge",
    "chamber_decomposition",
    "charge_line",
    "destabilizer_candidates",
    "euler_pairing",
    "example_threshold",
    "flop_count",
    "flop_count_formula",
    "flop_sequence",
    "higher_rank_floor",
    "higher_rank_walls",
    "ideal_sheaf_class",
    "make_surface",
    "moduli_dimension",
    "oracle_walls",
    "pair_wall",
    "pd_geometry",
    "rank_one_wall_value",
    "rank_one_walls",
    "rank_threshold",
    "sharp_bound",
    "slope_compare",
    "slope_function_floor",
    "stable_pairs_ambient",
    "target_class",
    "vanishing_max_length",
    "vanishing_wall_positive",
    "verify_positivity",
    "very_ample",
]
