"""Groebner-basis oracle for Hilbert series of binomial edge ideals."""

from .groebner import groebner, is_groebner_basis, normal_form, s_polynomial
from .monomial import (
    MonomialIdeal,
    inclusion_exclusion_numerator,
    initial_ideal,
    minimalize,
    monomial_numerator,
)
from .oracle import (
    VerifyReport,
    binomial_edge_groebner,
    binomial_generators,
    make_order,
    oracle_initial_ideal,
    oracle_series,
    verify,
)
from .polys import MonomialOrder, SparsePoly, degrevlex, lex

__all__ = [
    "MonomialIdeal",
    "MonomialOrder",
    "SparsePoly",
    "VerifyReport",
    "binomial_edge_groebner",
    "binomial_generators",
    "degrevlex",
    "groebner",
    "inclusion_exclusion_numerator",
    "initial_ideal",
    "is_groebner_basis",
    "lex",
    "make_order",
    "minimalize",
    "monomial_numerator",
    "normal_form",
    "oracle_initial_ideal",
    "oracle_series",
    "s_polynomial",
    "verify",
]
