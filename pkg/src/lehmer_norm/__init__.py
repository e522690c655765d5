"""Lehmer factorial norm on symmetric groups: codes, ranks, norm, metric and its distribution."""

from .distribution import (
    Decomposition,
    DecompositionError,
    DistributionRow,
    RecursionSession,
    classify,
    decomposition_to_permutation,
    distribution_table,
    enumerate_decompositions,
    enumerate_Sk,
    norm_histogram,
    parse_decomposition,
    permutation_to_decomposition,
    s_k_bruteforce,
    s_k_recursive,
    s_total,
    s_total_permutation_oracle,
)
from .lehmer import (
    CodeError,
    CodeInequalityReport,
    LehmerCode,
    check_code_inequalities,
    code_after_transposition,
    decode,
    factorial_digits,
    inverse_code,
    lehmer_code,
    lex_rank,
    lex_unrank,
    parse_code,
)
from .metric import (
    BoundsReport,
    distance,
    norm,
    norm_bounds_check,
    norm_of_adjacent_transposition,
    norm_of_natural,
    transposition_delta,
)
from .perm import (
    MAX_DEGREE,
    Permutation,
    PermutationError,
    adjacent_transposition,
    all_permutations,
    compose,
    conjugate_by_reverse,
    identity,
    include_iota,
    include_j,
    inverse,
    make_permutation,
    parse_permutation,
    reverse,
)

__version__ = "0.1.0"
