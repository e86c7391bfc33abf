"""Acyclic matchings between finite subsets of abelian groups."""

from .classify import (
    MultiplicityClass,
    acyclically_matched,
    all_ones_matchings,
    classify,
    is_acyclic,
    strongly_acyclically_matched,
)
from .errors import (
    AcymatchError,
    CapExceededError,
    NoMatchingsError,
    StructuralError,
    UnsupportedGroupError,
    ValidationError,
)
from .filter import FilterTrace, run_filter, run_filter_iterative, sequence_prefix_key
from .group import Element, GroupSpec, parse_elements, parse_spec
from .harness import PairVerdict, ScanSummary, evaluate_pair, find_counterexample, scan
from .matching import (
    Matching,
    Mode,
    SubsetPair,
    acyclicity_sequence,
    build_pair,
    count_matchings,
    enumerate_matchings,
    multiplicity,
    support,
    weak_condition,
)
from .pairs import PairQuery, count_pairs, generate_pairs

__version__ = "0.1.0"

__all__ = [
    "AcymatchError",
    "CapExceededError",
    "Element",
    "FilterTrace",
    "GroupSpec",
    "Matching",
    "Mode",
    "MultiplicityClass",
    "NoMatchingsError",
    "PairQuery",
    "PairVerdict",
    "ScanSummary",
    "StructuralError",
    "SubsetPair",
    "UnsupportedGroupError",
    "ValidationError",
    "acyclically_matched",
    "acyclicity_sequence",
    "all_ones_matchings",
    "build_pair",
    "classify",
    "count_matchings",
    "count_pairs",
    "enumerate_matchings",
    "evaluate_pair",
    "find_counterexample",
    "generate_pairs",
    "is_acyclic",
    "multiplicity",
    "parse_elements",
    "parse_spec",
    "run_filter",
    "run_filter_iterative",
    "scan",
    "sequence_prefix_key",
    "strongly_acyclically_matched",
    "support",
    "weak_condition",
]
