"""Exact simulation and enumeration of t-metered (m,n)-parking functions."""

from .enumeration import (
    DEFAULT_BUDGET,
    ConjectureReport,
    CountResult,
    TableCell,
    TableGrid,
    brute_count,
    build_table,
    check_monotone_conjecture,
    count,
    count_lucky_exact,
    formula_all_lucky,
    formula_one_lucky,
)
from .errors import (
    BudgetError,
    DomainError,
    InputError,
    MeteredParkingError,
    PrecisionError,
    VerificationError,
)
from .lace import (
    Lace,
    count_last_parks_at,
    count_t1_binet,
    count_t1_diag_closed,
    count_t1_n2,
    count_t1_recursive,
    count_t1_row3,
    displaced_indices,
    is_t1_by_lace,
    lace_decompose,
)
from .parksim import (
    FAIL,
    CarStatistics,
    ParkingInstance,
    is_mpf,
    is_pf_by_rearrangement,
    simulate_classical,
    simulate_metered,
    statistics,
    window_condition,
)
from .periodic import count_n1, is_n1_metered, l_stat, outcome_pf_count
from .shuffle import (
    ShuffleClassification,
    a_set_max,
    classify_shuffle,
    count_m2,
    count_m2_street_minus_one,
    count_pf_first_entry,
    in_shuffle_class,
    is_m2_metered,
    shuffle_count,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CarStatistics",
    "ConjectureReport",
    "CountResult",
    "DEFAULT_BUDGET",
    "DomainError",
    "FAIL",
    "InputError",
    "Lace",
    "MeteredParkingError",
    "ParkingInstance",
    "PrecisionError",
    "ShuffleClassification",
    "TableCell",
    "TableGrid",
    "VerificationError",
    "a_set_max",
    "brute_count",
    "build_table",
    "check_monotone_conjecture",
    "classify_shuffle",
    "count",
    "count_last_parks_at",
    "count_lucky_exact",
    "count_m2",
    "count_m2_street_minus_one",
    "count_n1",
    "count_pf_first_entry",
    "count_t1_binet",
    "count_t1_diag_closed",
    "count_t1_n2",
    "count_t1_recursive",
    "count_t1_row3",
    "displaced_indices",
    "formula_all_lucky",
    "formula_one_lucky",
    "in_shuffle_class",
    "is_m2_metered",
    "is_mpf",
    "is_n1_metered",
    "is_pf_by_rearrangement",
    "is_t1_by_lace",
    "l_stat",
    "lace_decompose",
    "outcome_pf_count",
    "shuffle_count",
    "simulate_classical",
    "simulate_metered",
    "statistics",
    "window_condition",
]
