"""Largest-rectangle citation indices and their property checkers."""

from .core import (
    BALANCED,
    EMPTY,
    INFLUENTIAL,
    PROLIFIC,
    TOLERANCE,
    AuxIndices,
    RecAnalysis,
    RecVariants,
    Vector,
    add_citation_at,
    add_one_to_all,
    aux_indices,
    chi_index,
    citation_count,
    close,
    conjugate,
    dominates,
    h_index,
    is_uniform,
    is_valid_vector,
    make_vector,
    max_uniform_dominated,
    rec,
    rec_index,
    rec_variants,
    scale,
    valid_positions,
)

__version__ = "0.1.0"

__all__ = [
    "AuxIndices",
    "BALANCED",
    "EMPTY",
    "INFLUENTIAL",
    "PROLIFIC",
    "RecAnalysis",
    "RecVariants",
    "TOLERANCE",
    "Vector",
    "add_citation_at",
    "add_one_to_all",
    "aux_indices",
    "chi_index",
    "citation_count",
    "close",
    "conjugate",
    "dominates",
    "h_index",
    "is_uniform",
    "is_valid_vector",
    "make_vector",
    "max_uniform_dominated",
    "rec",
    "rec_index",
    "rec_variants",
    "scale",
    "valid_positions",
    "__version__",
]
