"""Exact multiplicities for symmetric-group and GL_N representations.

Kostka numbers, Littlewood-Richardson and multi-LR coefficients, Kronecker
coefficients and the plethysm coefficients of h_d[h_m], each with at least
one independent oracle.  All values are Python integers.
"""

__version__ = "0.1.0"

from .errors import (
    Infeasible,
    MultCoefError,
    NegativeCoefficient,
    NotDecreasing,
    PartitionParseError,
    PreconditionViolated,
    SizeMismatch,
    VariableCountMismatch,
)
from .partitions import (
    FrobeniusCoords,
    Partition,
    aft,
    as_partition,
    conjugate,
    dimension,
    durfee,
    frobenius,
    hook_lengths,
    parse_partition,
    partitions_of,
)
from .tableaux import SkewShape, Tableau, enumerate_ssyt, enumerate_syt, is_ballot, kostka, reading_word, standardize_to_type
from .lr import lr_coefficient, lr_small_skew, lr_via_polytope, lr_via_tableaux, multi_lr, skew_kostka_as_lr
from .characters import CharacterTable, character, character_table, z_alpha
from .kronecker import kronecker, kronecker_character, kronecker_dispatch, kronecker_jt
from .plethysm import choose_plethysm_path, plethysm_dispatch, plethysm_hh, plethysm_hh_reduced
from .symfunc import SymPoly, gen_e, gen_h, gen_p, gen_s, kron_oracle, multiply, plethysm_coefficient_oracle, plethysm_substitute, schur_expand
from .growth import GrowthReport, check_aft_bounds, check_lr_ratio_bound, check_regev_bound, classify_growth, dim_ratio_kron

__all__ = [
    "Infeasible",
    "MultCoefError",
    "NegativeCoefficient",
    "NotDecreasing",
    "PartitionParseError",
    "PreconditionViolated",
    "SizeMismatch",
    "VariableCountMismatch",
    "FrobeniusCoords",
    "Partition",
    "aft",
    "as_partition",
    "conjugate",
    "dimension",
    "durfee",
    "frobenius",
    "hook_lengths",
    "parse_partition",
    "partitions_of",
    "SkewShape",
    "Tableau",
    "enumerate_ssyt",
    "enumerate_syt",
    "is_ballot",
    "kostka",
    "reading_word",
    "standardize_to_type",
    "lr_coefficient",
    "lr_small_skew",
    "lr_via_polytope",
    "lr_via_tableaux",
    "multi_lr",
    "skew_kostka_as_lr",
    "CharacterTable",
    "character",
    "character_table",
    "z_alpha",
    "kronecker",
    "kronecker_character",
    "kronecker_dispatch",
    "kronecker_jt",
    "choose_plethysm_path",
    "plethysm_dispatch",
    "plethysm_hh",
    "plethysm_hh_reduced",
    "SymPoly",
    "gen_e",
    "gen_h",
    "gen_p",
    "gen_s",
    "kron_oracle",
    "multiply",
    "plethysm_coefficient_oracle",
    "plethysm_substitute",
    "schur_expand",
    "GrowthReport",
    "check_aft_bounds",
    "check_lr_ratio_bound",
    "check_regev_bound",
    "classify_growth",
    "dim_ratio_kron",
]
