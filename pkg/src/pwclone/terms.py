"""Terms over the pigmented-monoid signature ``u``, ``p_alpha``, ``m``.

Text form: ``u``, ``x<INT>``, ``p{<PIGMENT>}(<term>)``, ``m(<term>,<term>)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ArityMismatch, MonoidMismatch, ParseError
from .monoid import Element, Monoid
from .words import PigmentedWord, act


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class U:
    pass


@dataclass(frozen=True)
class P:
    pigment: Element
    child: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


Node = Union[Var, U, P, Mul]


@dataclass(frozen=True)
class Term:
    """A tree over the signature together with its declared arity."""

    root: Node
    arity: int
    monoid: Monoid

    def __post_init__(self):
        top = max_variable(self.root)
        if top > self.arity:
            raise ArityMismatch(f"variable x{top} exceeds declared arity {self.arity}")
        for a in _pigments(self.root):
            self.monoid.check(a)

    def __str__(self) -> str:
        return format_term(self)


def _children(node: Node) -> tuple:
    if isinstance(node, P):
        return (node.child,)
    if isinstance(node, Mul):
        return (node.left, node.right)
    return ()


def _walk(node: Node):
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(_children(n))


def _pigments(node: Node):
    return (n.pigment for n in _walk(node) if isinstance(n, P))


def max_variable(node: Node) -> int:
    return max((n.index for n in _walk(node) if isinstance(n, Var)), default=0)


def degree(t: Term | Node) -> int:
    """Number of internal nodes (``u`` counts, variables do not)."""
    root = t.root if isinstance(t, Term) else t
    return sum(1 for n in _walk(root) if not isinstance(n, Var))


def length(t: Term | Node) -> int:
    """Number of variable occurrences."""
    root = t.root if isinstance(t, Term) else t
    return sum(1 for n in _walk(root) if isinstance(n, Var))


def _substitute(node: Node, roots: Sequence[Node]) -> Node:
    if isinstance(node, Var):
        return roots[node.index - 1]
    if isinstance(node, P):
        return P(node.pigment, _substitute(node.child, roots))
    if isinstance(node, Mul):
        return Mul(_substitute(node.left, roots), _substitute(node.right, roots))
    return node


def compose(t: Term, args: Sequence[Term], arity: int | None = None) -> Term:
    """Replace every ``x_i`` of ``t`` by ``args[i-1]``."""
    if len(args) != t.arity:
        raise ArityMismatch(f"term of arity {t.arity} given {len(args)} arguments")
    if args:
        arity = args[0].arity if arity is None else arity
    elif arity is None:
        raise ArityMismatch("composing a 0-ary term needs the target arity")
    for s in args:
        if s.arity != arity:
            raise ArityMismatch(f"arguments of arities {arity} and {s.arity}")
        if s.monoid != t.monoid:
            raise MonoidMismatch(f"argument over {s.monoid}, expected {t.monoid}")
    return Term(_substitute(t.root, [s.root for s in args]), arity, t.monoid)


def variable(i: int, n: int, monoid: Monoid) -> Term:
    return Term(Var(i), n, monoid)


def frontier(t: Term, monoid: Monoid | None = None) -> PigmentedWord:
    """Evaluate ``t`` in the clone of pigmented words."""
    m = t.monoid if monoid is None else monoid
    if m != t.monoid:
        raise MonoidMismatch(f"term over {t.monoid}, asked for {m}")

    def ev(node: Node) -> PigmentedWord:
        if isinstance(node, Var):
            return PigmentedWord._raw(((node.index, m.unit),), t.arity, m)
        if isinstance(node, U):
            return PigmentedWord._raw((), t.arity, m)
        if isinstance(node, P):
            return act(node.pigment, ev(node.child))
        return ev(node.left) + ev(node.right)

    return ev(t.root)


def right_comb(p: PigmentedWord) -> Term:
    """The right comb ``m(p{a1}(x_i1), m(p{a2}(x_i2), ... u))`` with frontier ``p``."""
    node: Node = U()
    for v, a in reversed(p.letters):
        node = Mul(P(a, Var(v)), node)
    return Term(node, p.arity, p.monoid)


def format_term(t: Term) -> str:
    fmt = t.monoid.format

    def go(node: Node) -> str:
        if isinstance(node, Var):
            return f"x{node.index}"
        if isinstance(node, U):
            return "u"
        if isinstance(node, P):
            return f"p{{{fmt(node.pigment)}}}({go(node.child)})"
        return f"m({go(node.left)},{go(node.right)})"

    return go(t.root)


class _TermParser:
    def __init__(self, text: str, monoid: Monoid):
        self.text = text
        self.pos = 0
        self.monoid = monoid

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.fail(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def node(self) -> Node:
        ch = self.peek()
        start = self.pos
        if ch == "u":
            self.pos += 1
            return U()
        if ch == "x":
            self.pos += 1
            end = self.pos
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            digits = self.text[self.pos:end]
            if not digits or int(digits) < 1:
                self.fail("expected a positive variable index", start)
            self.pos = end
            return Var(int(digits))
        if ch == "p":
            self.pos += 1
            self.expect("{")
            close = self.text.find("}", self.pos)
            if close < 0:
                self.fail("unterminated pigment")
            token = self.text[self.pos:close].strip()
            try:
                pigment = self.monoid.parse(token)
            except ParseError as exc:
                self.fail(exc.reason, self.pos)
            self.pos = close + 1
            self.expect("(")
            child = self.node()
            self.expect(")")
            return P(pigment, child)
        if ch == "m":
            self.pos += 1
            self.expect("(")
            left = self.node()
            self.expect(",")
            right = self.node()
            self.expect(")")
            return Mul(left, right)
        self.fail(f"unexpected {ch or 'end of input'!r}")

    def parse(self) -> Node:
        root = self.node()
        if self.peek():
            self.fail("trailing input")
        return root


def parse_term(text: str, monoid: Monoid, arity: int | None = None) -> Term:
    """Parse a term; the arity defaults to the largest variable index."""
    root = _TermParser(text, monoid).parse()
    top = max_variable(root)
    if arity is None:
        arity = top
    elif top > arity:
        raise ArityMismatch(f"variable x{top} exceeds arity {arity}")
    return Term(root, arity, monoid)
