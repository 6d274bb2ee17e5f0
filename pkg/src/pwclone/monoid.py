"""Pigment monoids: exact products, units, fixed total orders and morphisms.

Elements are plain hashable Python values whose meaning depends on the
owning monoid:

=========  ==========================================
Trivial    ``()``
Free       ``str`` over the alphabet (``""`` is the unit)
Cyclic     residue ``int`` in ``[0, modulus)``
IntAdd     ``int``
NatMax     ``int`` >= 0
Table      element index ``int``
=========  ==========================================

The unit of every kind is written ``e``.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Hashable, Iterator, Mapping

from .errors import DomainError, MonoidMismatch, ParseError

Element = Hashable

UNIT_TOKEN = "e"


class Monoid(ABC):
    """A monoid together with the total order used to sort pigments."""

    @property
    @abstractmethod
    def unit(self) -> Element: ...

    @abstractmethod
    def _mul(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def contains(self, a: Any) -> bool: ...

    @abstractmethod
    def key(self, a: Element) -> Any:
        """Sort key realizing the fixed total order of this kind."""

    @abstractmethod
    def _format(self, a: Element) -> str: ...

    @abstractmethod
    def _parse(self, token: str) -> Element: ...

    @property
    def size(self) -> int | None:
        """Number of elements, or ``None`` when infinite."""
        return None

    def elements(self) -> Iterator[Element]:
        raise DomainError(f"monoid {self} is infinite and cannot be enumerated")

    def generators(self) -> list[Element]:
        """A generating set; the full carrier for finite kinds."""
        return list(self.elements())

    def check(self, a: Any) -> Element:
        if not self.contains(a):
            raise MonoidMismatch(f"{a!r} is not an element of {self}")
        return a

    def mul(self, a: Element, b: Element) -> Element:
        return self._mul(self.check(a), self.check(b))

    def compare(self, a: Element, b: Element) -> int:
        ka, kb = self.key(self.check(a)), self.key(self.check(b))
        return (ka > kb) - (ka < kb)

    def format(self, a: Element) -> str:
        a = self.check(a)
        if a == self.unit:
            return UNIT_TOKEN
        return self._format(a)

    def parse(self, token: str) -> Element:
        if token == UNIT_TOKEN:
            return self.unit
        if not token:
            raise ParseError(f"empty pigment for {self}")
        return self._parse(token)


@dataclass(frozen=True)
class Trivial(Monoid):
    def __str__(self) -> str:
        return "trivial"

    @property
    def unit(self) -> Element:
        return ()

    def _mul(self, a, b):
        return ()

    def contains(self, a) -> bool:
        return a == ()

    def key(self, a):
        return 0

    def _format(self, a) -> str:
        return UNIT_TOKEN

    def _parse(self, token: str) -> Element:
        raise ParseError(f"pigment {token!r} invalid for trivial monoid (only 'e')")

    @property
    def size(self) -> int:
        return 1

    def elements(self):
        yield ()


@dataclass(frozen=True)
class Free(Monoid):
    """Free monoid on an ordered alphabet of single characters."""

    alphabet: str

    def __post_init__(self):
        if not self.alphabet:
            raise DomainError("free monoid needs a nonempty alphabet")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise DomainError(f"repeated symbol in alphabet {self.alphabet!r}")
        for s in self.alphabet:
            if s == UNIT_TOKEN or s == "^" or s.isspace() or not s.isprintable():
                raise DomainError(f"symbol {s!r} not allowed in a free alphabet")
        object.__setattr__(self, "_rank", {s: i for i, s in enumerate(self.alphabet)})

    def __str__(self) -> str:
        return f"free:{self.alphabet}"

    @property
    def unit(self) -> Element:
        return ""

    def _mul(self, a, b):
        return a + b

    def contains(self, a) -> bool:
        return isinstance(a, str) and all(s in self._rank for s in a)

    def key(self, a):
        # tuple order puts proper prefixes first
        return tuple(self._rank[s] for s in a)

    def _format(self, a) -> str:
        return a

    def _parse(self, token: str) -> Element:
        for i, s in enumerate(token):
            if s not in self._rank:
                raise ParseError(f"symbol {s!r} not in alphabet {self.alphabet!r}", token, i)
        return token

    def generators(self) -> list[Element]:
        return list(self.alphabet)


@dataclass(frozen=True)
class Cyclic(Monoid):
    """Integers modulo ``modulus`` under addition."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise DomainError(f"modulus must be a positive integer, got {self.modulus!r}")

    def __str__(self) -> str:
        return f"zmod:{self.modulus}"

    @property
    def unit(self) -> Element:
        return 0

    def _mul(self, a, b):
        return (a + b) % self.modulus

    def contains(self, a) -> bool:
        return type(a) is int and 0 <= a < self.modulus

    def key(self, a):
        return a

    def _format(self, a) -> str:
        return str(a)

    def _parse(self, token: str) -> Element:
        a = _parse_int(token)
        if not self.contains(a):
            raise ParseError(f"residue {a} out of range for {self}")
        return a

    @property
    def size(self) -> int:
        return self.modulus

    def elements(self):
        return iter(range(self.modulus))


@dataclass(frozen=True)
class IntAdd(Monoid):
    def __str__(self) -> str:
        return "int-add"

    @property
    def unit(self) -> Element:
        return 0

    def _mul(self, a, b):
        return a + b

    def contains(self, a) -> bool:
        return type(a) is int

    def key(self, a):
        return a

    def _format(self, a) -> str:
        return str(a)

    def _parse(self, token: str) -> Element:
        return _parse_int(token)

    def generators(self) -> list[Element]:
        return [1, -1]


@dataclass(frozen=True)
class NatMax(Monoid):
    """Nonnegative integers under ``max`` with unit 0."""

    def __str__(self) -> str:
        return "nat-max"

    @property
    def unit(self) -> Element:
        return 0

    def _mul(self, a, b):
        return max(a, b)

    def contains(self, a) -> bool:
        return type(a) is int and a >= 0

    def key(self, a):
        return a

    def _format(self, a) -> str:
        return str(a)

    def _parse(self, token: str) -> Element:
        a = _parse_int(token)
        if a < 0:
            raise ParseError(f"negative pigment {a} for {self}")
        return a

    def generators(self) -> list[Element]:
        # not finitely generated; a small sample stands in for morphism checks
        return [1, 2, 3]


@dataclass(frozen=True)
class Table(Monoid):
    """Finite monoid given by its multiplication table over element indices."""

    names: tuple[str, ...]
    unit_index: int
    table: tuple[tuple[int, ...], ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise DomainError("table monoid needs at least one element")
        if len(set(self.names)) != n:
            raise DomainError("table element names must be distinct")
        if not 0 <= self.unit_index < n:
            raise DomainError("unit index out of range")
        for i, name in enumerate(self.names):
            if name == UNIT_TOKEN and i != self.unit_index:
                raise DomainError("only the unit may be named 'e'")
            if not name or any(c.isspace() or c in "^;" for c in name):
                raise DomainError(f"bad element name {name!r}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise DomainError(f"operation table must be {n}x{n}")
        if any(not (type(x) is int and 0 <= x < n) for row in self.table for x in row):
            raise DomainError("operation table entries out of range")
        t, u = self.table, self.unit_index
        for a in range(n):
            if t[u][a] != a or t[a][u] != a:
                raise DomainError(f"{self.names[u]!r} is not a two-sided unit")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                names = self.names
                raise DomainError(f"table not associative at ({names[a]}, {names[b]}, {names[c]})")

    @classmethod
    def from_text(cls, text: str, source: str = "") -> "Table":
        lines = [line.split() for line in text.splitlines() if line.strip()]
        if len(lines) < 2:
            raise ParseError("table file needs element names, unit name and rows")
        names, unit_line, rows = lines[0], lines[1], lines[2:]
        if len(unit_line) != 1 or unit_line[0] not in names:
            raise ParseError(f"unit line must name one element, got {' '.join(unit_line)!r}")
        index = {name: i for i, name in enumerate(names)}
        try:
            table = tuple(tuple(index[x] for x in row) for row in rows)
        except KeyError as exc:
            raise ParseError(f"unknown element {exc.args[0]!r} in operation table") from None
        return cls(tuple(names), index[unit_line[0]], table, source)

    @classmethod
    def load(cls, path: str | Path) -> "Table":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise DomainError(f"cannot read table file {path}: {exc.strerror}") from None
        return cls.from_text(text, str(path))

    def __str__(self) -> str:
        return f"table:{self.source}" if self.source else f"table:{{{' '.join(self.names)}}}"

    @property
    def unit(self) -> Element:
        return self.unit_index

    def _mul(self, a, b):
        return self.table[a][b]

    def contains(self, a) -> bool:
        return type(a) is int and 0 <= a < len(self.names)

    def key(self, a):
        return a

    def _format(self, a) -> str:
        return self.names[a]

    def _parse(self, token: str) -> Element:
        try:
            return self.names.index(token)
        except ValueError:
            raise ParseError(f"unknown table element {token!r}") from None

    @property
    def size(self) -> int:
        return len(self.names)

    def elements(self):
        return iter(range(len(self.names)))


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer pigment, got {token!r}") from None


def parse_monoid(text: str) -> Monoid:
    """Parse ``trivial | free:<symbols> | zmod:<n> | int-add | nat-max | table:<path>``."""
    kind, _, arg = text.strip().partition(":")
    if kind == "trivial" and not arg:
        return Trivial()
    if kind == "int-add" and not arg:
        return IntAdd()
    if kind == "nat-max" and not arg:
        return NatMax()
    if kind == "free":
        return Free(arg)
    if kind == "zmod":
        try:
            return Cyclic(int(arg))
        except ValueError:
            raise ParseError(f"zmod needs an integer modulus, got {arg!r}") from None
    if kind == "table":
        return Table.load(arg)
    raise ParseError(f"unknown monoid {text!r}")


# module-level aliases matching the operation names used throughout the docs
def mmul(m: Monoid, a: Element, b: Element) -> Element:
    return m.mul(a, b)


def unit(m: Monoid) -> Element:
    return m.unit


def mcmp(m: Monoid, a: Element, b: Element) -> int:
    return m.compare(a, b)


@dataclass(frozen=True)
class Morphism:
    """Monoid morphism; validated at construction.

    ``rule`` is ``"identity"``, ``"free-length"`` or ``"pointwise"``.
    """

    source: Monoid
    target: Monoid
    rule: str
    mapping: tuple[tuple[Element, Element], ...] = ()

    def __post_init__(self):
        if self.rule == "identity":
            if self.source != self.target:
                raise DomainError("identity morphism needs source == target")
        elif self.rule == "free-length":
            if not isinstance(self.source, Free):
                raise DomainError("length morphism needs a free source monoid")
        elif self.rule == "pointwise":
            if self.source.size is None:
                raise DomainError("pointwise morphism needs a finite source")
            table = dict(self.mapping)
            if set(table) != set(self.source.elements()):
                raise DomainError("pointwise morphism must map every source element")
            for image in table.values():
                self.target.check(image)
        else:
            raise DomainError(f"unknown morphism rule {self.rule!r}")
        self._validate()

    def _validate(self) -> None:
        src, dst = self.source, self.target
        if self._apply(src.unit) != dst.unit:
            raise DomainError(f"{self.rule} morphism does not send unit to unit")
        gens = src.generators()
        for a, b in itertools.product(gens, repeat=2):
            if self._apply(src.mul(a, b)) != dst.mul(self._apply(a), self._apply(b)):
                raise DomainError(
                    f"{self.rule} map {src} -> {dst} is not multiplicative on "
                    f"({src.format(a)}, {src.format(b)})"
                )

    def _apply(self, a: Element) -> Element:
        if self.rule == "identity":
            return a
        if self.rule == "free-length":
            return len(a)
        return dict(self.mapping)[a]

    def apply(self, a: Element) -> Element:
        return self._apply(self.source.check(a))

    @classmethod
    def identity(cls, m: Monoid) -> "Morphism":
        return cls(m, m, "identity")

    @classmethod
    def free_length(cls, source: Free, target: Monoid | None = None) -> "Morphism":
        return cls(source, target if target is not None else IntAdd(), "free-length")

    @classmethod
    def pointwise(cls, source: Monoid, target: Monoid, mapping: Mapping[Element, Element]) -> "Morphism":
        return cls(source, target, "pointwise", tuple(sorted(mapping.items(), key=lambda kv: source.key(kv[0]))))

    @classmethod
    def to_trivial(cls, source: Monoid) -> "Morphism":
        return cls.pointwise(source, Trivial(), {a: () for a in source.elements()})


def apply_morphism(phi: Morphism, a: Element) -> Element:
    return phi.apply(a)
