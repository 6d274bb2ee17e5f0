"""Quotients of the clone of pigmented words.

A :class:`CloneId` names a quotient together with its pigment monoid and
dispatches normal forms, equivalence tests, quotient superposition, the
term-level word problem and dimension counts.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .errors import ArityMismatch, DomainError, MonoidMismatch, ParseError, ResourceLimit, UnsupportedVariety
from .monoid import Monoid, Trivial
from .normalizers import first_k, first_k_rev, inc_norm, magnet_norm, pill_norm, sort_norm, stal_norm
from .terms import Term, frontier
from .words import PigmentedWord, letter_key, reverse, superpose

VARIETIES = ("P", "WInc", "Arra", "ArraRev", "Inc", "Magn", "Stal", "StalRev", "Pill")

_TEXT_NAMES = {
    "p": "P",
    "winc": "WInc",
    "arra": "Arra",
    "arra-rev": "ArraRev",
    "inc": "Inc",
    "magn": "Magn",
    "stal": "Stal",
    "stal-rev": "StalRev",
    "pill": "Pill",
}
_NAME_TEXT = {v: k for k, v in _TEXT_NAMES.items()}

MAX_CLASSES_ENV = "PWCLONE_MAX_CLASSES"
DEFAULT_MAX_CLASSES = 10**7


class _Infinite:
    """Dimension of a graded component with infinitely many elements."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "infinite"


INFINITE = _Infinite()


@dataclass(frozen=True)
class CloneId:
    """A quotient clone. ``k`` and ``k2`` are the variety parameters.

    Single-parameter varieties use ``k``; ``Magn`` and ``Pill`` use both.
    """

    variety: str
    monoid: Monoid
    k: int = 0
    k2: int = 0

    def __post_init__(self):
        if self.variety not in VARIETIES:
            raise DomainError(f"unknown variety {self.variety!r}")
        if self.variety in ("P", "WInc") and (self.k or self.k2):
            raise DomainError(f"{self.variety} takes no parameter")
        if self.variety in ("Arra", "ArraRev", "Inc") and (self.k < 0 or self.k2):
            raise DomainError(f"{self.variety} takes one parameter k >= 0")
        if self.variety in ("Stal", "StalRev") and (self.k < 1 or self.k2):
            raise DomainError(f"{self.variety} takes one parameter k >= 1")
        if self.variety in ("Magn", "Pill") and (self.k < 0 or self.k2 < 0):
            raise DomainError(f"{self.variety} parameters must be nonnegative")
        if self.variety == "Inc" and not isinstance(self.monoid, Trivial):
            raise UnsupportedVariety(f"Inc needs the trivial monoid, not {self.monoid}")

    def __str__(self) -> str:
        name = _NAME_TEXT[self.variety]
        if self.variety in ("P", "WInc"):
            return name
        if self.variety in ("Magn", "Pill"):
            return f"{name}:{self.k},{self.k2}"
        return f"{name}:{self.k}"

    @property
    def has_normal_form(self) -> bool:
        if self.variety in ("Magn", "Pill"):
            return (self.k, self.k2) == (1, 1)
        return True

    def reversed(self) -> "CloneId":
        """The clone whose congruence is the mirror image of this one."""
        swap = {"Arra": "ArraRev", "ArraRev": "Arra", "Stal": "StalRev", "StalRev": "Stal"}
        if self.variety in swap:
            return CloneId(swap[self.variety], self.monoid, self.k)
        if self.variety in ("Magn", "Pill"):
            return CloneId(self.variety, self.monoid, self.k2, self.k)
        return self


def parse_clone(text: str, monoid: Monoid) -> CloneId:
    """Parse ``p | winc | arra:k | arra-rev:k | inc:k | magn[:k,k'] | stal:k | stal-rev:k | pill[:k,k']``.

    A missing parameter defaults to 1.
    """
    name, _, arg = text.strip().partition(":")
    variety = _TEXT_NAMES.get(name)
    if variety is None:
        raise ParseError(f"unknown clone {text!r}")
    try:
        params = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise ParseError(f"bad clone parameters in {text!r}") from None
    if variety in ("P", "WInc"):
        if params:
            raise ParseError(f"{name} takes no parameter")
        return CloneId(variety, monoid)
    if variety in ("Magn", "Pill"):
        if len(params) not in (0, 2):
            raise ParseError(f"{name} takes two parameters k,k'")
        k, k2 = params or (1, 1)
        return CloneId(variety, monoid, k, k2)
    if len(params) > 1:
        raise ParseError(f"{name} takes one parameter")
    return CloneId(variety, monoid, params[0] if params else 1)


def _check_word(c: CloneId, p: PigmentedWord) -> None:
    if p.monoid is not c.monoid and p.monoid != c.monoid:
        raise MonoidMismatch(f"word over {p.monoid}, clone over {c.monoid}")


def normal_form(c: CloneId, p: PigmentedWord) -> PigmentedWord:
    _check_word(c, p)
    v = c.variety
    if v == "P":
        return p
    if v == "WInc":
        return sort_norm(p)
    if v == "Arra":
        return first_k(p, c.k)
    if v == "ArraRev":
        return first_k_rev(p, c.k)
    if v == "Inc":
        return inc_norm(p, c.k)
    if v == "Stal":
        return stal_norm(p, c.k)
    if v == "StalRev":
        return reverse(stal_norm(reverse(p), c.k))
    if not c.has_normal_form:
        raise UnsupportedVariety(f"no normal form is known for {c}; only equivalence is available")
    if v == "Magn":
        return magnet_norm(p)
    return pill_norm(p)


def class_key(c: CloneId, p: PigmentedWord):
    """Hashable invariant; two words are equivalent iff their keys agree."""
    if c.has_normal_form:
        return normal_form(c, p).letters
    _check_word(c, p)
    head, tail = first_k(p, c.k).letters, first_k_rev(p, c.k2).letters
    if c.variety == "Magn":
        return (head, tail)
    return (head, sort_norm(p).letters, tail)


def equiv(c: CloneId, p: PigmentedWord, q: PigmentedWord) -> bool:
    _check_word(c, p)
    _check_word(c, q)
    if p.arity != q.arity:
        raise ArityMismatch(f"comparing words of arities {p.arity} and {q.arity}")
    return class_key(c, p) == class_key(c, q)


def clone_superpose(
    c: CloneId, p: PigmentedWord, args: Sequence[PigmentedWord], arity: int | None = None
) -> PigmentedWord:
    if not c.has_normal_form:
        raise UnsupportedVariety(f"no normal form is known for {c}")
    return normal_form(c, superpose(p, args, arity))


def term_equiv(c: CloneId, t: Term, s: Term) -> bool:
    if t.arity != s.arity:
        raise ArityMismatch(f"comparing terms of arities {t.arity} and {s.arity}")
    return equiv(c, frontier(t, c.monoid), frontier(s, c.monoid))


def _finite_size(c: CloneId) -> int:
    size = c.monoid.size
    if size is None:
        raise DomainError(f"dimension formula for {c} needs a finite monoid, got {c.monoid}")
    return size


def arrangement_count(n: int, k: int, size: int | None) -> int:
    """Number of words on ``n`` values with at most ``k`` copies of each, weighted by pigments."""
    # ways[L]: ordered sequences of length L built so far
    ways = [1]
    for _ in range(n):
        grown = [0] * (len(ways) + k)
        for length, count in enumerate(ways):
            if count:
                for j in range(k + 1):
                    grown[length + j] += count * comb(length + j, j)
        ways = grown
    if len(ways) == 1:
        return ways[0]
    if size is None:
        raise DomainError("arrangement count needs a finite monoid")
    return sum(count * size**length for length, count in enumerate(ways))


def dims(c: CloneId, n: int):
    """Number of elements of arity ``n``; :data:`INFINITE` when unbounded."""
    if n < 0:
        raise DomainError(f"arity must be nonnegative, got {n}")
    if n == 0:
        return 1
    v = c.variety
    if v == "Inc":
        return (c.k + 1) ** n
    if v in ("Arra", "ArraRev"):
        return arrangement_count(n, c.k, c.monoid.size if c.k else 1)
    if v == "Magn":
        if c.k2 == 0 or c.k == 0:
            k = max(c.k, c.k2)
            return arrangement_count(n, k, c.monoid.size if k else 1)
        if (c.k, c.k2) != (1, 1):
            raise UnsupportedVariety(f"no dimension formula is known for {c}")
        size = _finite_size(c)
        return sum(comb(n, i) * factorial(i) ** 2 * size ** (2 * i) for i in range(n + 1))
    return INFINITE


def default_max_len(c: CloneId, n: int) -> int | None:
    """Longest normal form of arity ``n``, or ``None`` if unbounded."""
    if n == 0:
        return 0
    if c.variety in ("Arra", "ArraRev", "Inc"):
        return c.k * n
    if c.variety == "Magn" and c.has_normal_form:
        return 2 * n
    return None


def max_classes() -> int:
    raw = os.environ.get(MAX_CLASSES_ENV)
    if raw is None:
        return DEFAULT_MAX_CLASSES
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{MAX_CLASSES_ENV} must be an integer, got {raw!r}") from None


def all_words(n: int, monoid: Monoid, max_len: int, pigments: Sequence | None = None):
    """Every word of arity ``n`` and length at most ``max_len``, shortest first."""
    pigs = list(monoid.elements()) if pigments is None else list(pigments)
    alphabet = [(v, a) for v in range(1, n + 1) for a in pigs]
    for length in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield PigmentedWord._raw(letters, n, monoid)


def word_sort_key(p: PigmentedWord):
    """Shortlex order: length, then letters under the letter order."""
    m = p.monoid
    return (len(p), [letter_key(m, x) for x in p.letters])


def enumerate_classes(c: CloneId, n: int, max_len: int | None = None) -> list[PigmentedWord]:
    """Distinct normal forms of every word of arity ``n`` up to ``max_len`` letters."""
    if not c.has_normal_form:
        raise UnsupportedVariety(f"no normal form is known for {c}")
    if n == 0:
        return [PigmentedWord._raw((), 0, c.monoid)]
    if max_len is None:
        max_len = default_max_len(c, n)
        if max_len is None:
            raise UnsupportedVariety(f"{c} has infinitely many elements of arity {n}; give a length bound")
    size = c.monoid.size
    if size is None:
        raise DomainError(f"enumeration needs a finite monoid, got {c.monoid}")
    letters = n * size
    total = sum(letters**length for length in range(max_len + 1))
    cap = max_classes()
    if total > cap:
        raise ResourceLimit(f"enumeration would scan {total} words, above the cap {cap} ({MAX_CLASSES_ENV})")
    seen = {}
    for p in all_words(n, c.monoid, max_len):
        q = normal_form(c, p)
        seen.setdefault(q.letters, q)
    return sorted(seen.values(), key=word_sort_key)

