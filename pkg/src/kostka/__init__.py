"""Kostka numbers, the dominance order on partitions, and exhaustive verification.

The library computes Kostka numbers for straight and skew Young diagrams with
arbitrary composition contents, models the dominance order (comparison, covers,
saturated chains), analyses tableau classes fixed away from an adjacent entry
pair, and ships brute-force-backed verification suites that check every claim
exhaustively at desk scale. The `kostka` console script exposes all of it.
"""

from .counting import count_bounded_compositions, split_by_first_part
from .engine import (
    KostkaMatrix,
    cache_size,
    canonical_box_skew_shapes,
    clear_cache,
    kostka_matrix,
    kostka_number,
    verify_monotonicity,
    verify_positivity,
)
from .partitions import (
    COLUMN,
    ROW,
    CoverMove,
    NotComparableError,
    Parts,
    SizeMismatchError,
    adjacent_transfer_chain,
    adjacent_transfer_index,
    apply_move,
    composition,
    conjugate,
    cover_chain,
    covers,
    display_parts,
    dominates,
    format_parts,
    full_transfer_chain,
    parse_parts,
    part_at,
    partition,
    partitions_of,
)
from .reports import Report
from .tableaux import (
    Cell,
    SkewShape,
    Tableau,
    content_of,
    enumerate_ssyt,
    is_semistandard,
    iter_semistandard,
)
from .transfer_classes import (
    ClassSignature,
    adjacent_transfer_counts,
    count_in_class,
    signature_census,
    signature_of,
    transfer_target,
)
from .verify import (
    bounded_content_family,
    brute_force_covers,
    content_census,
    run_standard_suites,
    verify_adjacent_transfer,
    verify_bounded_counts,
    verify_covers,
    verify_oracle_equivalence,
    verify_permutation_invariance,
    verify_transfer_chains,
)

__version__ = "0.1.0"

__all__ = [
    "COLUMN",
    "Cell",
    "ClassSignature",
    "CoverMove",
    "KostkaMatrix",
    "NotComparableError",
    "Parts",
    "ROW",
    "Report",
    "SizeMismatchError",
    "SkewShape",
    "Tableau",
    "adjacent_transfer_chain",
    "adjacent_transfer_counts",
    "adjacent_transfer_index",
    "apply_move",
    "bounded_content_family",
    "brute_force_covers",
    "cache_size",
    "canonical_box_skew_shapes",
    "clear_cache",
    "composition",
    "conjugate",
    "content_census",
    "content_of",
    "count_bounded_compositions",
    "count_in_class",
    "cover_chain",
    "covers",
    "display_parts",
    "dominates",
    "enumerate_ssyt",
    "format_parts",
    "full_transfer_chain",
    "is_semistandard",
    "iter_semistandard",
    "kostka_matrix",
    "kostka_number",
    "parse_parts",
    "part_at",
    "partition",
    "partitions_of",
    "run_standard_suites",
    "signature_census",
    "signature_of",
    "split_by_first_part",
    "transfer_target",
    "verify_adjacent_transfer",
    "verify_bounded_counts",
    "verify_covers",
    "verify_monotonicity",
    "verify_oracle_equivalence",
    "verify_permutation_invariance",
    "verify_positivity",
    "verify_transfer_chains",
    "__version__",
]
