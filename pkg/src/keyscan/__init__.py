"""Right and left keys of semistandard Young tableaux.

Computes keys by the direct scanning (EWIS) method, verifies them against
an independent jeu de taquin oracle, and uses them to compute Demazure
characters (key polynomials).
"""

from .tableau import (
    SkewTableau,
    Tableau,
    TableauError,
    conjugate,
    count_tableaux,
    entrywise_leq,
    enumerate_tableaux,
    format_tableau,
    parse_tableau,
)
from .scanning import ewis, left_key, scan_column, scanning_tableau
from .jdt import left_key_oracle, rectify, right_key_oracle
from .demazure import (
    SparsePolynomial,
    demazure_by_operators,
    demazure_character,
    format_polynomial,
    key_of_composition,
    schur_polynomial,
)

__all__ = [
    "SkewTableau",
    "SparsePolynomial",
    "Tableau",
    "TableauError",
    "conjugate",
    "count_tableaux",
    "demazure_by_operators",
    "demazure_character",
    "entrywise_leq",
    "enumerate_tableaux",
    "ewis",
    "format_polynomial",
    "format_tableau",
    "key_of_composition",
    "left_key",
    "left_key_oracle",
    "parse_tableau",
    "rectify",
    "right_key_oracle",
    "scan_column",
    "scanning_tableau",
    "schur_polynomial",
]

__version__ = "0.1.0"
