"""Workbench for finite ordered Gamma-semigroups.

A structure is a finite carrier 0..n-1 with k labelled binary operation
tables and a compatible partial order.  The package computes ideals,
filters, the canonical filter-kernel partitions, regularity predicates
and simple-component decompositions, checks a catalogue of claims on any
given structure, and enumerates or samples whole slices of the structure
space to hunt for counterexamples.
"""

__version__ = "0.1.0"

from .core import (InputError, OwnerError, PreconditionError, Structure,
                   Subset, ValidationReport, downset, gamma_product, upset,
                   validate, word_product)
from .gpsjson import digest, dump, dumps, load, loads
from .fixtures import (constant_zero, left_zero, min_semilattice, right_zero,
                       singleton)
from .ideals import (IdealKind, all_filters, all_ideals, filter_gen,
                     ideals_form_chain, is_filter, is_ideal,
                     is_idempotent_subset, is_prime, is_semiprime,
                     is_weakly_prime, principal)
from .relations import (Partition, all_partitions, is_congruence,
                        is_complete_semilattice_congruence,
                        is_semilattice_congruence, relation_partition)
from .analysis import (ClassVerdict, DecompositionReport, all_subsemigroups,
                       decompose, is_intra_regular, is_intra_regular_legacy,
                       is_left_duo, is_left_regular, is_left_regular_legacy,
                       is_left_simple, is_relative_ideal, is_right_duo,
                       is_right_regular, is_right_regular_legacy,
                       is_right_simple, is_simple, is_subsemigroup,
                       maximal_simple_subsemigroups, relative_ideals)
from .harness import THEOREM_IDS, TheoremVerdict, check, check_all
from .explore import (EnumSpec, PREDICATES, SamplingBudgetError,
                      enumerate_structures, eval_expr, parse_expr,
                      partial_orders, random_structure, search)

__all__ = [
    "__version__",
    # core
    "InputError", "OwnerError", "PreconditionError", "Structure", "Subset",
    "ValidationReport", "downset", "upset", "gamma_product", "word_product",
    "validate",
    # gpsjson
    "load", "loads", "dump", "dumps", "digest",
    # fixtures
    "singleton", "min_semilattice", "left_zero", "right_zero", "constant_zero",
    # ideals
    "IdealKind", "is_ideal", "principal", "all_ideals", "is_filter",
    "all_filters", "filter_gen", "is_prime", "is_semiprime",
    "is_weakly_prime", "is_idempotent_subset", "ideals_form_chain",
    # relations
    "Partition", "relation_partition", "is_congruence",
    "is_semilattice_congruence", "is_complete_semilattice_congruence",
    "all_partitions",
    # analysis
    "is_intra_regular", "is_intra_regular_legacy", "is_left_regular",
    "is_left_regular_legacy", "is_right_regular", "is_right_regular_legacy",
    "is_left_duo", "is_right_duo", "is_subsemigroup", "all_subsemigroups",
    "is_relative_ideal", "relative_ideals", "is_simple", "is_left_simple",
    "is_right_simple", "ClassVerdict", "DecompositionReport", "decompose",
    "maximal_simple_subsemigroups",
    # harness
    "THEOREM_IDS", "TheoremVerdict", "check", "check_all",
    # explore
    "EnumSpec", "PREDICATES", "SamplingBudgetError", "enumerate_structures",
    "partial_orders", "random_structure", "parse_expr", "eval_expr", "search",
]
