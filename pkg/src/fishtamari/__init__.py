"""Tamari intervals, extended fighting fish, and the bijection between them."""
from .bijection import phi_direct, phi_inverse, phi_recursive, validate_fish
from .dyck import (
    DyckPath,
    contact_vector,
    conjugate_path,
    descent_vector,
    parse_path,
    path_from_contact_vector,
    path_from_descent_vector,
    type_vector,
)
from .errors import *  # noqa: F401,F403
from .fish import (
    EMPTY_FISH,
    FishWord,
    PointedFish,
    conjugate_fish,
    fish_augment,
    fish_compose_high,
    fish_compose_low,
    fish_concat,
    fish_decompose,
    fish_stats,
    parse_fish,
)
from .tamari import (
    EMPTY_INTERVAL,
    PointedInterval,
    TamariInterval,
    build_hasse,
    distance_formula,
    gamma,
    intervals,
    longest_chain,
    make_interval,
    tamari_leq,
)

__version__ = "0.1.0"
