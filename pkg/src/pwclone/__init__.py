"""Clones of pigmented words and their quotients."""

from .clones import (
    INFINITE,
    VARIETIES,
    CloneId,
    class_key,
    clone_superpose,
    dims,
    enumerate_classes,
    equiv,
    normal_form,
    parse_clone,
    term_equiv,
)
from .errors import (
    ArityMismatch,
    CloneError,
    DomainError,
    MonoidMismatch,
    ParseError,
    ResourceLimit,
    UnsupportedVariety,
)
from .monoid import (
    Cyclic,
    Free,
    IntAdd,
    Monoid,
    Morphism,
    NatMax,
    Table,
    Trivial,
    apply_morphism,
    mcmp,
    mmul,
    parse_monoid,
    unit,
)
from .normalizers import (
    first_k,
    first_k_rev,
    inc_norm,
    magnet_norm,
    pill_norm,
    sort_norm,
    stal_norm,
    witnesses,
)
from .suites import SUITES, Budget, Report, check_suite
from .terms import Mul, Term, U, Var, compose, degree, format_term, frontier, length, parse_term, right_comb
from .terms import P as Pig
from .words import PigmentedWord, act, format_word, map_pigments, parse_word, parse_words, projection, reverse, superpose

__version__ = "0.1.0"
