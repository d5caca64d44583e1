"""Monomial ideals with tiny powers.

Exact arithmetic on monomial ideals, the skeleton-plus-cross-section
construction of ideals whose powers have fewer minimal generators than
the ideal itself, and the improved divisibility test guaranteeing a
nine-generator square for bivariate ideals.
"""

__version__ = "0.1.0"

from .backend import BACKEND, HAVE_COMPILED
from .construction import (
    ConstructionReport,
    capacity,
    choose_t,
    construct,
    cross_section_count,
    cross_section_monomials,
    q_box_membership,
    skeleton,
    verify_absorption,
)
from .errors import (
    ArityMismatchError,
    EmptyGeneratingSetError,
    ExponentOverflowError,
    IdealpowError,
    OracleCapError,
    ParameterError,
    ParseError,
    PreconditionError,
    TheoremViolationError,
)
from .monomial import (
    DEFAULT_ORACLE_CAP,
    Monomial,
    MonomialIdeal,
    contains_ideal,
    contains_monomial,
    divides,
    equals,
    minimalize,
    multiply,
    power,
    power_naive,
    product,
)
from .tiny_squares import (
    AT_MOST_NINE,
    CONDITIONS_FAIL,
    VERIFIED_NINE,
    ConditionReport,
    SortedBivariateIdeal,
    TinySquareReport,
    check_improved,
    check_original,
    dual_index,
    family_ideal,
    interval_divisibility_holds,
    normalize,
    predicted_nine,
    redundancy_check,
    swap_reverse,
    verify_tiny_square,
)

__all__ = [
    "BACKEND",
    "HAVE_COMPILED",
    "Monomial",
    "MonomialIdeal",
    "SortedBivariateIdeal",
    "ConditionReport",
    "TinySquareReport",
    "ConstructionReport",
    "divides",
    "multiply",
    "minimalize",
    "product",
    "power",
    "power_naive",
    "contains_monomial",
    "contains_ideal",
    "equals",
    "skeleton",
    "capacity",
    "cross_section_count",
    "choose_t",
    "cross_section_monomials",
    "q_box_membership",
    "verify_absorption",
    "construct",
    "normalize",
    "check_improved",
    "check_original",
    "predicted_nine",
    "verify_tiny_square",
    "family_ideal",
    "dual_index",
    "redundancy_check",
    "interval_divisibility_holds",
    "swap_reverse",
    "VERIFIED_NINE",
    "AT_MOST_NINE",
    "CONDITIONS_FAIL",
    "DEFAULT_ORACLE_CAP",
    "IdealpowError",
    "ArityMismatchError",
    "ExponentOverflowError",
    "EmptyGeneratingSetError",
    "OracleCapError",
    "ParameterError",
    "PreconditionError",
    "ParseError",
    "TheoremViolationError",
]
