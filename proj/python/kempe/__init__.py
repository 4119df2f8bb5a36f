"""Kempe equivalence of graph colorings via binomial ideals and Groebner bases."""

from ._core import (
    DomainError,
    Graph,
    InternalError,
    ResourceError,
    Session,
    chromatic_number,
    classify_chain,
    max_degree,
    oracle_class_count,
    oracle_equivalent,
    stable_sets,
    verify_sequence,
)

__all__ = [
    "DomainError",
    "Graph",
    "InternalError",
    "ResourceError",
    "Session",
    "chromatic_number",
    "classify_chain",
    "max_degree",
    "oracle_class_count",
    "oracle_equivalent",
    "stable_sets",
    "verify_sequence",
]
