"""Counting and bounding more-sums-than-differences sets in finite abelian
groups: exact exhaustive counts, forbiddance graphs with exact
independent-set indices, and closed-form bound evaluation."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    asymptotic,
    build_report,
    even_density_ok,
    even_ratio_within_cap,
    even_upper_ratio,
    lower_bound_even,
    lower_bound_odd,
    lucas_root_monotonic,
    odd_sum_bracket,
    upper_bound,
)
from .enumerate_subsets import (
    EnumerationCapError,
    EnumerationResult,
    MissingHistogram,
    containment_violations,
    count_avoiding,
    count_full_sumset_avoiding,
    count_mstd,
    missing_histogram,
)
from .fib_index import (
    ComponentTooLargeError,
    count_independent_sets,
    fib_index_exact,
    fibonacci,
    index_cycle,
    index_ladder,
    index_path,
    index_prism,
    lucas,
    regular_bound_check,
)
from .forbiddance import (
    Component,
    Decomposition,
    ForbiddanceGraph,
    ForbiddanceSpec,
    build_graph,
    decompose,
)
from .groups import (
    GroupSpec,
    count_order_below,
    element_order,
    factorizations,
    groups_of_order,
    groups_up_to,
    half_set,
    order_two_count,
    small_order_set,
)
from .subsets import (
    SubsetMask,
    diffset,
    integer_mstd_check,
    is_mstd,
    lift_cyclic,
    lift_general,
    sumset,
)

__all__ = [
    "BoundReport",
    "Component",
    "ComponentTooLargeError",
    "Decomposition",
    "EnumerationCapError",
    "EnumerationResult",
    "ForbiddanceGraph",
    "ForbiddanceSpec",
    "GroupSpec",
    "MissingHistogram",
    "SubsetMask",
    "asymptotic",
    "build_graph",
    "build_report",
    "containment_violations",
    "count_avoiding",
    "count_full_sumset_avoiding",
    "count_independent_sets",
    "count_mstd",
    "count_order_below",
    "decompose",
    "diffset",
    "element_order",
    "even_density_ok",
    "even_ratio_within_cap",
    "even_upper_ratio",
    "factorizations",
    "fib_index_exact",
    "fibonacci",
    "groups_of_order",
    "groups_up_to",
    "half_set",
    "index_cycle",
    "index_ladder",
    "index_path",
    "index_prism",
    "integer_mstd_check",
    "is_mstd",
    "lift_cyclic",
    "lift_general",
    "lower_bound_even",
    "lower_bound_odd",
    "lucas",
    "lucas_root_monotonic",
    "missing_histogram",
    "odd_sum_bracket",
    "order_two_count",
    "regular_bound_check",
    "small_order_set",
    "sumset",
    "upper_bound",
]
