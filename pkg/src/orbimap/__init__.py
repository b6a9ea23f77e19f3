"""Computing in orbifold mapping class groups of marked disks.

Core objects: GroupParams fixes the surface data, Word carries letters
over the mixed (H/T/U) or pure (A/B/C) alphabet, normal_form combs any
word into per-level syllables plus a symmetric-group coset, and the
braid-strand oracle cross-checks every decision independently.
"""

from .params import GroupParams, OrbimapError, ParamsError, params
from .words import (
    AlphabetError,
    Letter,
    LetterRangeError,
    ParseError,
    Permutation,
    Word,
    empty_word,
    free_reduce,
    make_letter,
    parse_word,
    perm_image,
    random_word,
    word_to_text,
)
from .presentations import (
    Presentation,
    expand_word,
    export_presentation,
    full_presentation,
    pure_presentation,
)
from .combing import (
    BlowupError,
    NonPureError,
    NormalForm,
    apply_action,
    comb,
    forget,
    is_trivial,
    normal_form,
    push,
    rewrite_pure,
    section,
)
from .oracle import oracle_equal, oracle_is_trivial, validate_embedding
from .gamma import GammaElement, gamma_from_text, gamma_multiply, gamma_to_text
from .gpath import gpath_from_text, gpath_normalize

__version__ = "0.1.0"

__all__ = [
    "GroupParams",
    "OrbimapError",
    "ParamsError",
    "params",
    "AlphabetError",
    "Letter",
    "LetterRangeError",
    "ParseError",
    "Permutation",
    "Word",
    "empty_word",
    "free_reduce",
    "make_letter",
    "parse_word",
    "perm_image",
    "random_word",
    "word_to_text",
    "Presentation",
    "expand_word",
    "export_presentation",
    "full_presentation",
    "pure_presentation",
    "BlowupError",
    "NonPureError",
    "NormalForm",
    "apply_action",
    "comb",
    "forget",
    "is_trivial",
    "normal_form",
    "push",
    "rewrite_pure",
    "section",
    "oracle_equal",
    "oracle_is_trivial",
    "validate_embedding",
    "GammaElement",
    "gamma_from_text",
    "gamma_multiply",
    "gamma_to_text",
    "gpath_from_text",
    "gpath_normalize",
    "__version__",
]
