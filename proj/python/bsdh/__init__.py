"""Fano and weak-Fano classification of iterated projective-line bundles.

Thin re-export of the compiled core.  Structured results come back as
plain dicts/lists with the same schema the command-line tool emits as
JSON.
"""

from ._core import (
    CapacityError,
    Error,
    InvalidInput,
    NotReducedError,
    __version__,
    anticanonical_degrees,
    audit,
    beta_matrix,
    cartan_matrix,
    classify,
    classify_matrix,
    enumerate_classified,
    is_reduced,
    positive_roots,
    reduced_words,
)

__all__ = [
    "CapacityError",
    "Error",
    "InvalidInput",
    "NotReducedError",
    "__version__",
    "anticanonical_degrees",
    "audit",
    "beta_matrix",
    "cartan_matrix",
    "classify",
    "classify_matrix",
    "enumerate_classified",
    "is_reduced",
    "positive_roots",
    "reduced_words",
]
