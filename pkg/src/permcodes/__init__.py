"""Permutation codes from linear block codes.

Exact-arithmetic bounds on M(n, d), the largest permutation code in S_n at
Hamming distance d, plus a working construction: bucket the cosets of a
residue subgroup by parity-check syndrome and keep the largest bucket.
"""

from .bounds import (
    AmdsBound,
    BoundCell,
    BoundReport,
    amds_lower,
    amds_vs_old_threshold,
    bound_report,
    derangement_count,
    envelope_new_old,
    general_firstbound,
    gv_lower,
    hamming_ball_size,
    mds_lower,
    mds_plus1_lower,
    old_prime_lower,
    ratio_amds_old,
    ratio_new_old,
    singleton_like_upper,
    sphere_packing_upper,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    LengthMismatch,
    NotAPrimePower,
    NotFullWeight,
    NotInDual,
    ParameterError,
    ParseError,
    PermcodesError,
    PreconditionViolated,
    SpecMismatch,
    VerificationFailed,
)
from .gf import (
    FieldElement,
    FieldSpec,
    field_make,
    is_prime,
    is_prime_power,
    next_prime,
    next_prime_power,
)
from .linear import (
    LinearCode,
    MatrixGF,
    codewords,
    dual,
    find_full_weight_dual_codeword,
    generator_matrix,
    in_dual,
    min_distance,
    normalize_first_row_ones,
    nonzero_weight_set,
    parity_check,
    parity_check_with_ones_row,
    random_code_search,
    read_code_file,
    singleton_defect,
    write_code_file,
)
from .mds import extended_rs, is_mds, reed_solomon, verify_dual_mds, weight_spectrum_check
from .perms import (
    ConstructionCertificate,
    PermutationCode,
    ResidueSubgroupSpec,
    binary_lift,
    brute_force_M,
    brute_force_max_code,
    code_min_distance,
    compose,
    construct_permutation_code,
    coset_representatives,
    identity_perm,
    inverse,
    involution_pairs,
    lift_code_into_K,
    max_binary_code,
    max_code_in_K,
    perm_hamming,
    phi,
    read_permutation_code,
    subgroup_K,
    syndrome_buckets,
    write_permutation_code,
)

__version__ = "0.1.0"

__all__ = [
    "AmdsBound",
    "BoundCell",
    "BoundReport",
    "BudgetExceeded",
    "ConstructionCertificate",
    "DimensionMismatch",
    "FieldElement",
    "FieldSpec",
    "LengthMismatch",
    "LinearCode",
    "MatrixGF",
    "NotAPrimePower",
    "NotFullWeight",
    "NotInDual",
    "ParameterError",
    "ParseError",
    "PermcodesError",
    "PermutationCode",
    "PreconditionViolated",
    "ResidueSubgroupSpec",
    "SpecMismatch",
    "VerificationFailed",
    "amds_lower",
    "amds_vs_old_threshold",
    "binary_lift",
    "bound_report",
    "brute_force_M",
    "brute_force_max_code",
    "code_min_distance",
    "codewords",
    "compose",
    "construct_permutation_code",
    "coset_representatives",
    "derangement_count",
    "dual",
    "envelope_new_old",
    "extended_rs",
    "field_make",
    "find_full_weight_dual_codeword",
    "general_firstbound",
    "generator_matrix",
    "gv_lower",
    "hamming_ball_size",
    "identity_perm",
    "inverse",
    "in_dual",
    "involution_pairs",
    "is_mds",
    "is_prime",
    "is_prime_power",
    "lift_code_into_K",
    "max_binary_code",
    "max_code_in_K",
    "mds_lower",
    "mds_plus1_lower",
    "min_distance",
    "next_prime",
    "next_prime_power",
    "nonzero_weight_set",
    "normalize_first_row_ones",
    "old_prime_lower",
    "parity_check",
    "parity_check_with_ones_row",
    "perm_hamming",
    "phi",
    "random_code_search",
    "ratio_amds_old",
    "ratio_new_old",
    "read_code_file",
    "read_permutation_code",
    "reed_solomon",
    "singleton_defect",
    "singleton_like_upper",
    "sphere_packing_upper",
    "subgroup_K",
    "syndrome_buckets",
    "verify_dual_mds",
    "weight_spectrum_check",
    "write_code_file",
    "write_permutation_code",
]
