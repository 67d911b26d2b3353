from .covers import (
    CoverFamily,
    CoverSpec,
    different_degree_formula,
    extend_constants,
    genus_formula,
    parse_cover_spec,
    random_cover_spec,
    validate,
)
from .places import (
    PlaceCountWork,
    PlaceKind,
    RationalPlace,
    SplittingType,
    count_places,
    count_places_of_degree,
    count_places_with_work,
    enumerate_places,
    merge_place_counts,
    point_count_bruteforce,
    point_count_sums,
    rational_place_counts,
    split_place,
    sums_from_place_counts,
)
from .ramification import (
    RamificationEntry,
    RamificationReport,
    genus_via_riemann_hurwitz,
    ramification_report,
)

__all__ = [
    CoverFamily,
    CoverSpec,
    PlaceCountWork,
    PlaceKind,
    RamificationEntry,
    RamificationReport,
    RationalPlace,
    SplittingType,
    count_places,
    count_places_of_degree,
    count_places_with_work,
    different_degree_formula,
    enumerate_places,
    extend_constants,
    genus_formula,
    genus_via_riemann_hurwitz,
    merge_place_counts,
    parse_cover_spec,
    point_count_bruteforce,
    point_count_sums,
    random_cover_spec,
    ramification_report,
    rational_place_counts,
    split_place,
    sums_from_place_counts,
    validate,
]
