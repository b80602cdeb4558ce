"""Exact computations with finitely presented graded algebras.

Noncommutative Groebner bases, Hilbert series, quadratic duals, element
certificates, set-partition series and Ext tables over the rationals.
"""

from .errors import (
    AlgebraError,
    InconsistentError,
    InvalidInputError,
    ParseError,
    ResourceError,
    TruncationError,
)
from .ncpoly import EMPTY, Generator, GeneratorSet, MonomialOrder, NcPoly, compare_words, signed_generator
from .quadratic import (
    Presentation,
    catalog,
    change_of_variables,
    dual_presentation,
    parse_polynomial,
    parse_presentation,
    quadratic_data,
    quadratic_dual,
    quotient_by,
)
from .rewrite import ReductionSystem, complete, normal_basis, normal_form
from .invariants import TruncatedSeries, gk_estimate, hilbert_truncation, series_from_rational
from .koszul import ExtTable, ext_table, p_koszul_bound, pairing_dim_check

__version__ = "0.1.0"
