"""Pattern containment in permutations, set partitions, and restricted
growth words, built around a size-doubling reduction from permutation
containment to partition containment.

The library exposes:

- core: the structure types and primitive operations (standardization,
  restriction, word encodings);
- matchers: backtracking containment and counting engines for all three
  notions, with deterministic lexicographically least witnesses;
- reduction: the matchstick map permutation -> partition and the two-way
  transport between occurrences and restriction witnesses;
- fastpaths: linear-time containment for all-singleton and single-block
  patterns, plus a dispatcher;
- oracle: naive brute-force references, exhaustive enumerators, census,
  and the verification gates that check the engines and the reduction
  against the references at desk scale;
- cli: the ``permpart`` command.

The hot search loops live in a compiled extension when built, with a pure
Python fallback selected at import (see permpart._backend).
"""

from ._backend import kernel_backend
from .core import (
    Permutation,
    RGFWord,
    SetPartition,
    StandardizationMap,
    flatten,
    partition_of_rgf,
    restrict,
    rgf_of,
    standardize,
    value_standardize,
)
from .errors import BoundExceeded, SearchCancelled
from .fastpaths import (
    PatternShape,
    ShapeTag,
    classify_pattern,
    contains_all_singletons,
    contains_single_block,
    dispatch_contains,
)
from .matchers import (
    MatchResult,
    OccurrenceIndices,
    SubsetWitness,
    partition_contains,
    partition_count,
    perm_contains,
    perm_count,
    rgf_contains,
    rgf_count,
)
from .oracle import (
    CensusRow,
    Mismatch,
    VerificationReport,
    bell_number,
    brute_partition_contains,
    brute_partition_count,
    census,
    enumerate_partitions,
    enumerate_permutations,
    verify_reduction,
    verify_rgf_coincidence,
)
from .reduction import (
    is_matchstick,
    perm_of_matchstick,
    recover_occurrence,
    reduce_perm,
    transport_occurrence,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "CensusRow",
    "MatchResult",
    "Mismatch",
    "OccurrenceIndices",
    "PatternShape",
    "Permutation",
    "RGFWord",
    "SearchCancelled",
    "SetPartition",
    "ShapeTag",
    "StandardizationMap",
    "SubsetWitness",
    "VerificationReport",
    "bell_number",
    "brute_partition_contains",
    "brute_partition_count",
    "census",
    "classify_pattern",
    "contains_all_singletons",
    "contains_single_block",
    "dispatch_contains",
    "enumerate_partitions",
    "enumerate_permutations",
    "flatten",
    "is_matchstick",
    "kernel_backend",
    "partition_contains",
    "partition_count",
    "partition_of_rgf",
    "perm_contains",
    "perm_count",
    "perm_of_matchstick",
    "recover_occurrence",
    "reduce_perm",
    "restrict",
    "rgf_contains",
    "rgf_count",
    "rgf_of",
    "standardize",
    "transport_occurrence",
    "value_standardize",
    "verify_reduction",
    "verify_rgf_coincidence",
]
