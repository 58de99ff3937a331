"""Algebraic hulls of rational matrix Lie algebras.

The hull of a matrix Lie algebra over Q is the smallest algebraic Lie
algebra containing it.  This package computes hulls exactly, without
constructing splitting fields: eigenvalue relations are certified with
p-adic arithmetic in unramified extensions plus integer-lattice
reduction.
"""

from .hull import (
    HullResult,
    OracleHull,
    closed_form_deg4,
    closed_form_deg6,
    hull_lie_algebra,
    hull_matrix,
    hull_semisimple,
    is_algebraic,
)
from .matrices import (
    MatrixSpan,
    as_matrix,
    bracket_closure,
    char_poly,
    companion,
    jordan_decomposition,
    min_poly,
)
from .relations import (
    ExponentPolynomial,
    RelationBasis,
    TargetSet,
    find_relations_galois,
    find_relations_lll,
    is_zero,
)

__all__ = [
    "HullResult",
    "OracleHull",
    "closed_form_deg4",
    "closed_form_deg6",
    "hull_lie_algebra",
    "hull_matrix",
    "hull_semisimple",
    "is_algebraic",
    "MatrixSpan",
    "as_matrix",
    "bracket_closure",
    "char_poly",
    "companion",
    "jordan_decomposition",
    "min_poly",
    "ExponentPolynomial",
    "RelationBasis",
    "TargetSet",
    "find_relations_galois",
    "find_relations_lll",
    "is_zero",
]

__version__ = "0.1.0"
