__all__ = [
    "FormulaCoefficients",
    "coefficient_sequences",
    "default_table",
    "evaluate",
    "exact_lower_bound",
    "formula_start",
    "frobenius_direct",
    "g_formula",
    "n_r_finite",
    "quadratic_form",
    "residue_minima",
]

from .apery import default_table, formula_start, frobenius_direct, n_r_finite, residue_minima
from .formula import (
    FormulaCoefficients,
    coefficient_sequences,
    evaluate,
    exact_lower_bound,
    g_formula,
    quadratic_form,
)
