__all__ = [
    "UNREACHABLE",
    "CapVector",
    "MinPlusSeries",
    "MinRepTable",
    "caps",
    "ceil_three_halves",
    "default_truncation",
    "greedy_representation",
    "iota_k",
    "iota_table",
    "irregular_terms",
    "minimal_truncation",
    "optimal_representation",
    "partial_products",
    "stability_bound",
    "stability_threshold",
]

from .constants import UNREACHABLE
from .series import (
    CapVector,
    MinPlusSeries,
    caps,
    ceil_three_halves,
    minimal_truncation,
    partial_products,
    stability_bound,
)
from .table import (
    MinRepTable,
    default_truncation,
    greedy_representation,
    iota_k,
    iota_table,
    irregular_terms,
    optimal_representation,
    stability_threshold,
)
