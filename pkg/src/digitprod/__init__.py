"""Iterated powered digit products.

One application of the map takes n to the k-th power of the product
of its nonzero decimal digits. The package computes orbits, scans
ranges for integers whose orbit reaches 1, and checks structural
claims about those integers at scale.
"""

from .conjectures import (
    HOLDS,
    HOLDS_WITH_UNDECIDED,
    REFUTED,
    ConjectureReport,
    DigitProfile,
    check_cardinality,
    check_conjecture1,
    check_lemma1,
    check_no_nine,
    check_smooth_families,
    check_steps_bound,
    check_theorem1,
    compare_cardinalities,
    find_square_terms_with_steps,
    scan_candidate_squares,
    scan_smooth_squares_0125,
    second_iterate_profile,
)
from .core import (
    DEFAULT_BUDGET,
    SIZE_EXCEEDED,
    STEPS_EXHAUSTED,
    EntersCycle,
    IterationBudget,
    Membership,
    Outcome,
    ReachesOne,
    Trajectory,
    Undecided,
    decimal_digit_count,
    decimal_string,
    digits_of,
    is_term,
    iterate_trajectory,
    product_nonzero_digits,
    step,
    steps_to_one,
)
from .residues import (
    ResidueClass,
    SieveReport,
    binary_digit_values,
    count_ones_multiple_of_nine,
    digit_length_of_power_product,
    exclude_suffix,
    heuristic_expected_count,
    is_power_of_ten,
    multiplicative_order,
    residue_table_mod_100,
    search_binary_digit_squares,
    sieve_binary_residues,
    squares_mod,
    strip_trailing_zero_pairs,
    verify_periodic_congruence,
)
from .sequences import (
    ScanPartition,
    TermRecord,
    TermTable,
    closure_insert,
    digit_permutations,
    enumerate_terms,
    export_bfile,
    export_json,
    export_trajectory_csv,
    export_trajectory_json,
    parallel_scan,
)
from .smooth import (
    SMOOTH_PRIMES,
    Factorization,
    digit_product_preimage,
    factor_smooth,
    is_seven_smooth,
    seven_smooth_up_to,
)

__version__ = "0.1.0"

__all__ = [
    "HOLDS",
    "HOLDS_WITH_UNDECIDED",
    "REFUTED",
    "ConjectureReport",
    "DigitProfile",
    "check_cardinality",
    "check_conjecture1",
    "check_lemma1",
    "check_no_nine",
    "check_smooth_families",
    "check_steps_bound",
    "check_theorem1",
    "compare_cardinalities",
    "find_square_terms_with_steps",
    "scan_candidate_squares",
    "scan_smooth_squares_0125",
    "second_iterate_profile",
    "DEFAULT_BUDGET",
    "SIZE_EXCEEDED",
    "STEPS_EXHAUSTED",
    "EntersCycle",
    "IterationBudget",
    "Membership",
    "Outcome",
    "ReachesOne",
    "Trajectory",
    "Undecided",
    "decimal_digit_count",
    "decimal_string",
    "digits_of",
    "is_term",
    "iterate_trajectory",
    "product_nonzero_digits",
    "step",
    "steps_to_one",
    "ResidueClass",
    "SieveReport",
    "binary_digit_values",
    "count_ones_multiple_of_nine",
    "digit_length_of_power_product",
    "exclude_suffix",
    "heuristic_expected_count",
    "is_power_of_ten",
    "multiplicative_order",
    "residue_table_mod_100",
    "search_binary_digit_squares",
    "sieve_binary_residues",
    "squares_mod",
    "strip_trailing_zero_pairs",
    "verify_periodic_congruence",
    "ScanPartition",
    "TermRecord",
    "TermTable",
    "closure_insert",
    "digit_permutations",
    "enumerate_terms",
    "export_bfile",
    "export_json",
    "export_trajectory_csv",
    "export_trajectory_json",
    "parallel_scan",
    "SMOOTH_PRIMES",
    "Factorization",
    "digit_product_preimage",
    "factor_smooth",
    "is_seven_smooth",
    "seven_smooth_up_to",
    "__version__",
]
