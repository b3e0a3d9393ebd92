"""Pattern containment in 0-1 matrices.

Decide whether an n x n 0-1 matrix contains a forbidden 0-1 pattern, using
quadratic-time scans for the recognized pattern families, a counter scan for
all-ones rectangles, and a brute-force oracle for everything else; compute
exact extremal values (the most ones an avoiding matrix can carry) for small
n; and benchmark the scans to check their complexity empirically.
"""

from .matrix import (
    AllOnes,
    BitMatrix,
    ColumnOnes,
    Cross,
    General,
    Identity,
    LShape,
    MatrixFormatError,
    PatternClass,
    RowOnes,
    SparseEntries,
    TupleIdentity,
    all_ones,
    classify_pattern,
    count_ones,
    cross,
    identity,
    lshape,
    parse_matrix,
    serialize,
    serialize_sparse,
    to_sparse,
    transpose,
    transpose_sparse,
    tuple_identity,
    zeros,
)
from .naive import contains_naive, contains_naive_sparse
from .fast import (
    CrossCounts,
    IdentityDP,
    PrefilterResult,
    contains_allones,
    contains_column_ones,
    contains_cross,
    contains_identity,
    contains_lshape,
    contains_tuple_identity,
    cross_counts,
    dispatch,
    identity_dp,
    max_allones_rows,
    max_column_ones,
    max_identity,
    max_lshape_height,
    max_tuple_identity_width,
    ones_prefilter,
)
from .extremal import (
    DEFAULT_NODE_BUDGET,
    ExtremalRecord,
    SearchBudgetExceeded,
    bounds_from_cache,
    ex_exact,
    ex_table,
    load_cache,
    save_cache,
    verify_record,
)
from .bench import (
    BenchConfigError,
    BenchReport,
    UnsupportedPatternError,
    bench_compare,
    fit_exponent,
    gen_avoider,
    gen_random,
    write_bench_csv,
)

__all__ = [
    "AllOnes",
    "BenchConfigError",
    "BenchReport",
    "BitMatrix",
    "ColumnOnes",
    "Cross",
    "CrossCounts",
    "DEFAULT_NODE_BUDGET",
    "ExtremalRecord",
    "General",
    "Identity",
    "IdentityDP",
    "LShape",
    "MatrixFormatError",
    "PatternClass",
    "PrefilterResult",
    "RowOnes",
    "SearchBudgetExceeded",
    "SparseEntries",
    "TupleIdentity",
    "UnsupportedPatternError",
    "all_ones",
    "bench_compare",
    "bounds_from_cache",
    "classify_pattern",
    "contains_allones",
    "contains_column_ones",
    "contains_cross",
    "contains_identity",
    "contains_lshape",
    "contains_naive",
    "contains_naive_sparse",
    "contains_tuple_identity",
    "count_ones",
    "cross",
    "cross_counts",
    "dispatch",
    "ex_exact",
    "ex_table",
    "fit_exponent",
    "gen_avoider",
    "gen_random",
    "identity",
    "identity_dp",
    "load_cache",
    "lshape",
    "max_allones_rows",
    "max_column_ones",
    "max_identity",
    "max_lshape_height",
    "max_tuple_identity_width",
    "ones_prefilter",
    "parse_matrix",
    "save_cache",
    "serialize",
    "serialize_sparse",
    "to_sparse",
    "transpose",
    "transpose_sparse",
    "tuple_identity",
    "verify_record",
    "write_bench_csv",
    "zeros",
]
