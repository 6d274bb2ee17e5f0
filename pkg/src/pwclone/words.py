"""Pigmented words and the clone structure on them."""

from __future__ import annotations

import re
from operator import itemgetter
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import ArityMismatch, DomainError, MonoidMismatch, ParseError
from .monoid import Element, Monoid, Morphism


# a letter is a plain ``(value, pigment)`` pair
Letter = Tuple[int, Element]


class PigmentedWord(tuple):
    """An immutable sequence of letters with an explicit arity.

    Stored as the triple ``(letters, arity, monoid)``; two words are equal
    only if all three agree. Length and iteration refer to the letters.
    """

    __slots__ = ()

    letters: tuple[Letter, ...] = property(itemgetter(0))  # type: ignore[assignment]
    arity: int = property(itemgetter(1))  # type: ignore[assignment]
    monoid: Monoid = property(itemgetter(2))  # type: ignore[assignment]

    def __new__(cls, letters: Iterable[tuple[int, Element]], arity: int, monoid: Monoid):
        letters = tuple((v, p) for v, p in letters)
        if not isinstance(arity, int) or arity < 0:
            raise DomainError(f"arity must be a nonnegative integer, got {arity!r}")
        for v, p in letters:
            if not isinstance(v, int) or not 1 <= v <= arity:
                raise ArityMismatch(f"letter value {v} outside [1, {arity}]")
            monoid.check(p)
        return tuple.__new__(cls, (letters, arity, monoid))

    @classmethod
    def _raw(cls, letters: tuple, arity: int, monoid: Monoid) -> "PigmentedWord":
        # trusted constructor for results built from already valid words
        return tuple.__new__(cls, (letters, arity, monoid))

    def __getnewargs__(self):
        return (self.letters, self.arity, self.monoid)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __contains__(self, letter) -> bool:
        return letter in self.letters

    def __add__(self, other: "PigmentedWord") -> "PigmentedWord":
        _same_space(self, other)
        return PigmentedWord._raw(self.letters + other.letters, self.arity, self.monoid)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"PigmentedWord({format_word(self)!r}, arity={self.arity}, monoid={self.monoid})"

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.letters)

    def with_letters(self, letters: Iterable[tuple[int, Element]]) -> "PigmentedWord":
        """Same arity and monoid, new letters (each taken from a valid word)."""
        return PigmentedWord._raw(tuple(letters), self.arity, self.monoid)


def _same_space(p: PigmentedWord, q: PigmentedWord) -> None:
    if p.monoid != q.monoid:
        raise MonoidMismatch(f"words over {p.monoid} and {q.monoid}")
    if p.arity != q.arity:
        raise ArityMismatch(f"words of arity {p.arity} and {q.arity}")


def empty(arity: int, monoid: Monoid) -> PigmentedWord:
    return PigmentedWord((), arity, monoid)


def letter_key(m: Monoid, letter: Letter):
    """Sort key of the letter order: value first, then pigment."""
    return (letter[0], m.key(letter[1]))


def act(alpha: Element, p: PigmentedWord) -> PigmentedWord:
    """Left-multiply every pigment of ``p`` by ``alpha``."""
    m = p.monoid
    m.check(alpha)
    if alpha == m.unit:
        return p
    mul = m._mul
    return PigmentedWord._raw(tuple([(v, mul(alpha, a)) for v, a in p.letters]), p.arity, m)


def superpose(p: PigmentedWord, args: Sequence[PigmentedWord], arity: int | None = None) -> PigmentedWord:
    """Substitute ``args[i-1]``, acted on by the pigment, for each letter ``i``.

    ``arity`` is the common arity of the arguments; it must be given when
    ``p`` is 0-ary and is checked against the arguments otherwise.
    """
    if len(args) != p.arity:
        raise ArityMismatch(f"word of arity {p.arity} given {len(args)} arguments")
    m = p.monoid
    if args:
        if arity is None:
            arity = args[0].arity
        for q in args:
            if q.monoid is not m and q.monoid != m:
                raise MonoidMismatch(f"argument over {q.monoid}, expected {m}")
            if q.arity != arity:
                raise ArityMismatch(f"arguments of arities {arity} and {q.arity}")
    elif arity is None:
        raise ArityMismatch("superposing a 0-ary word needs the target arity")
    mul, unit = m._mul, m.unit
    out: list = []
    append = out.append
    for v, alpha in p.letters:
        src = args[v - 1].letters
        if alpha == unit:
            out += src
        else:
            for w, b in src:
                append((w, mul(alpha, b)))
    return PigmentedWord._raw(tuple(out), arity, m)


def projection(i: int, n: int, monoid: Monoid) -> PigmentedWord:
    if not 1 <= i <= n:
        raise ArityMismatch(f"projection index {i} outside [1, {n}]")
    return PigmentedWord._raw(((i, monoid.unit),), n, monoid)


def reverse(p: PigmentedWord) -> PigmentedWord:
    return PigmentedWord._raw(p.letters[::-1], p.arity, p.monoid)


def map_pigments(phi: Morphism, p: PigmentedWord) -> PigmentedWord:
    if p.monoid != phi.source:
        raise MonoidMismatch(f"morphism source {phi.source} but word over {p.monoid}")
    return PigmentedWord._raw(tuple([(v, phi.apply(a)) for v, a in p.letters]), p.arity, phi.target)


def format_word(p: PigmentedWord) -> str:
    if not p.letters:
        return "_"
    fmt = p.monoid.format
    return " ".join(f"{v}^{fmt(a)}" for v, a in p.letters)


_LETTER = re.compile(r"(\d+)\^(\S+)")


def _parse_letters(text: str, monoid: Monoid) -> list[Letter]:
    stripped = text.strip()
    if stripped == "_":
        return []
    if not stripped:
        raise ParseError("empty word text (write '_' for the empty word)", text, 0)
    letters = []
    for tok in re.finditer(r"\S+", text):
        match = _LETTER.fullmatch(tok.group())
        if match is None:
            raise ParseError(f"malformed letter {tok.group()!r}", text, tok.start())
        value = int(match.group(1))
        if value < 1:
            raise ParseError("letter values start at 1", text, tok.start())
        try:
            pigment = monoid.parse(match.group(2))
        except ParseError as exc:
            raise ParseError(exc.reason, text, tok.start() + len(match.group(1)) + 1) from None
        letters.append((value, pigment))
    return letters


def parse_word(text: str, monoid: Monoid, arity: int | None = None) -> PigmentedWord:
    """Parse ``_`` or space separated ``INT^PIGMENT`` letters.

    Without ``arity`` the largest value is used; the empty word then
    needs an explicit arity.
    """
    return parse_words([text], monoid, arity)[0]


def parse_words(texts: Sequence[str], monoid: Monoid, arity: int | None = None) -> list[PigmentedWord]:
    """Parse several words sharing one arity (inferred jointly if omitted)."""
    parsed = [_parse_letters(t, monoid) for t in texts]
    if arity is None:
        values = [v for letters in parsed for v, _ in letters]
        if not values:
            raise ParseError("cannot infer the arity of the empty word; pass an explicit arity")
        arity = max(values)
    return [PigmentedWord(letters, arity, monoid) for letters in parsed]
