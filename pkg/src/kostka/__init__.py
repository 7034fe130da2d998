"""Exact Kostka-number combinatorics with fast certified predicates."""

from .counting import (
    is_multiplicity_one,
    is_multiplicity_one_multi,
    is_positive,
    kostka,
    kostka_multi,
    unique_weight,
    unique_weight_multi,
    verify_certificate,
    verify_certificate_multi,
)
from .ggg import theta_kostka, theta_positive, zelcor_multiplicity_one
from .partitions import (
    dominates,
    is_horizontal_strip,
    normalize,
    sort_to_partition,
    tilde,
)
from .tableaux import (
    enumerate_multitableaux,
    enumerate_tableaux,
    greedy_tableau,
    is_semistandard,
    redistribute_columns,
    weight,
)
from .wreath import (
    Constituent,
    decompose_permutation_character,
    hook_length_degree,
    irreducible_degree,
)

__all__ = [
    "Constituent",
    "decompose_permutation_character",
    "dominates",
    "enumerate_multitableaux",
    "enumerate_tableaux",
    "greedy_tableau",
    "hook_length_degree",
    "irreducible_degree",
    "is_horizontal_strip",
    "is_multiplicity_one",
    "is_multiplicity_one_multi",
    "is_positive",
    "is_semistandard",
    "kostka",
    "kostka_multi",
    "normalize",
    "redistribute_columns",
    "sort_to_partition",
    "theta_kostka",
    "theta_positive",
    "tilde",
    "unique_weight",
    "unique_weight_multi",
    "verify_certificate",
    "verify_certificate_multi",
    "weight",
    "zelcor_multiplicity_one",
]

__version__ = "0.1.0"
