"""Braid word division into positive quotient form, reductions of the word
and conjugacy problems from the group to the positive monoid, and a Garside
left-canonical-form equality oracle used to verify every claim."""

from .bridge import d_word, delta_word, extend, fsd, fsd_symmetric, gsd, standardize
from .extended import (
    RULE_CORRECTED,
    RULE_LITERAL,
    DivisionPair,
    ExtendedLetter,
    ExtendedWord,
    GedResult,
    GedStats,
    Trip,
    big_shift,
    bishift,
    commutation_swap,
    commutation_swap_rev,
    ged,
    ged_details,
    separation,
    sh,
)
from .garside import (
    GarsideForm,
    PermutationBraid,
    PositivityError,
    enumerate_positive,
    equal_group,
    equal_monoid,
    normal_form,
)
from .reductions import (
    ConjugacyInstance,
    MonoidEquationInstance,
    conjugacy_search_instance,
    reduce_conjugacy,
    reduce_word_problem,
    search_conjugator,
)
from .words import (
    LetterRangeError,
    ParseError,
    StandardLetter,
    StandardWord,
    StrandCountError,
    StrandMismatchError,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # words
    "StandardLetter",
    "StandardWord",
    "ParseError",
    "StrandCountError",
    "StrandMismatchError",
    "LetterRangeError",
    # extended calculus
    "ExtendedLetter",
    "ExtendedWord",
    "Trip",
    "DivisionPair",
    "GedResult",
    "GedStats",
    "sh",
    "big_shift",
    "bishift",
    "separation",
    "ged",
    "ged_details",
    "commutation_swap",
    "commutation_swap_rev",
    "RULE_CORRECTED",
    "RULE_LITERAL",
    # bridge
    "delta_word",
    "d_word",
    "extend",
    "standardize",
    "fsd",
    "fsd_symmetric",
    "gsd",
    # reductions
    "MonoidEquationInstance",
    "ConjugacyInstance",
    "reduce_word_problem",
    "reduce_conjugacy",
    "conjugacy_search_instance",
    "search_conjugator",
    # oracle
    "PermutationBraid",
    "GarsideForm",
    "PositivityError",
    "normal_form",
    "equal_group",
    "equal_monoid",
    "enumerate_positive",
]
