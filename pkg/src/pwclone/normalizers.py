"""Canonical-representative maps on pigmented words.

Each normalizer is idempotent and its fibers are the classes of a clone
congruence. The rewriting normalizers (magnets, pillars) run their rules
with a leftmost-redex strategy; witness flags are recomputed on the
current word before every step.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, UnsupportedVariety
from .monoid import Trivial
from .words import PigmentedWord, letter_key, reverse


@dataclass(frozen=True)
class WitnessFlags:
    left: tuple[bool, ...]
    right: tuple[bool, ...]
    k: int


def _left_flags(values, k: int) -> list[bool]:
    seen: Counter = Counter()
    flags = []
    for v in values:
        flags.append(seen[v] < k)
        seen[v] += 1
    return flags


def witnesses(p: PigmentedWord, k: int) -> WitnessFlags:
    """Left and right k-witness flags of every position of ``p``."""
    if k < 1:
        raise DomainError(f"witness parameter must be positive, got {k}")
    values = [v for v, _ in p.letters]
    left = _left_flags(values, k)
    right = _left_flags(values[::-1], k)[::-1]
    return WitnessFlags(tuple(left), tuple(right), k)


def first_k(p: PigmentedWord, k: int) -> PigmentedWord:
    """Subword of the left k-witness positions; empty for ``k = 0``."""
    if k < 0:
        raise DomainError(f"first_k needs k >= 0, got {k}")
    if k == 0:
        return p.with_letters(())
    flags = _left_flags([v for v, _ in p.letters], k)
    return p.with_letters(x for x, keep in zip(p.letters, flags) if keep)


def first_k_rev(p: PigmentedWord, k: int) -> PigmentedWord:
    return reverse(first_k(reverse(p), k))


def sort_norm(p: PigmentedWord) -> PigmentedWord:
    """Stable sort by value, then pigment."""
    m = p.monoid
    return p.with_letters(sorted(p.letters, key=lambda x: letter_key(m, x)))


def inc_norm(p: PigmentedWord, k: int) -> PigmentedWord:
    if not isinstance(p.monoid, Trivial):
        raise UnsupportedVariety(f"increasing words need the trivial monoid, not {p.monoid}")
    return sort_norm(first_k(p, k))


def _rewrite(p: PigmentedWord, step: Callable[[list, WitnessFlags], bool]) -> PigmentedWord:
    """Apply ``step`` (which edits the letter list in place) until it reports no redex."""
    letters = list(p.letters)
    while True:
        flags = witnesses(p.with_letters(letters), 1)
        if not step(letters, flags):
            return p.with_letters(letters)


def _advance_last_occurrence(letters: list, flags: WitnessFlags) -> bool:
    # i1 (not right witness) i2 (right but not left witness), i1 != i2  ->  i2 i1
    left, right = flags.left, flags.right
    for j in range(len(letters) - 1):
        if (
            letters[j][0] != letters[j + 1][0]
            and not right[j]
            and right[j + 1]
            and not left[j + 1]
        ):
            letters[j], letters[j + 1] = letters[j + 1], letters[j]
            return True
    return False


def magnet_stage1(p: PigmentedWord) -> PigmentedWord:
    """Keep only first and last occurrences of each value."""
    f = witnesses(p, 1)
    return p.with_letters(x for x, l, r in zip(p.letters, f.left, f.right) if l or r)


def magnet_stage2(p: PigmentedWord) -> PigmentedWord:
    return _rewrite(p, _advance_last_occurrence)


def magnet_stage3(p: PigmentedWord) -> PigmentedWord:
    """Collapse runs of identical adjacent letters."""
    out: list = []
    for x in p.letters:
        if not out or out[-1] != x:
            out.append(x)
    return p.with_letters(out)


def magnet_norm(p: PigmentedWord) -> PigmentedWord:
    return magnet_stage3(magnet_stage2(magnet_stage1(p)))


def stal_norm(p: PigmentedWord, k: int) -> PigmentedWord:
    """Left k-witnesses in order, then the other letters sorted."""
    if k < 1:
        raise DomainError(f"stalactite parameter must be positive, got {k}")
    m = p.monoid
    flags = _left_flags([v for v, _ in p.letters], k)
    head = [x for x, w in zip(p.letters, flags) if w]
    tail = [x for x, w in zip(p.letters, flags) if not w]
    return p.with_letters(head + sorted(tail, key=lambda x: letter_key(m, x)))


def _gather_middle(letters: list, flags: WitnessFlags) -> bool:
    # i^a1 q i^a2 -> i^a1 i^a2 q with q nonempty and free of i, i^a2 a middle occurrence
    last_seen: dict = {}
    for j, (v, _) in enumerate(letters):
        a = last_seen.get(v)
        if a is not None and j > a + 1 and not flags.left[j] and not flags.right[j]:
            letters.insert(a + 1, letters.pop(j))
            return True
        last_seen[v] = j
    return False


def pill_stage1(p: PigmentedWord) -> PigmentedWord:
    return _rewrite(p, _gather_middle)


def pill_stage2(p: PigmentedWord) -> PigmentedWord:
    m = p.monoid

    def sort_middles(letters: list, flags: WitnessFlags) -> bool:
        left, right = flags.left, flags.right
        for j in range(len(letters) - 1):
            (v1, a1), (v2, a2) = letters[j], letters[j + 1]
            if (
                v1 == v2
                and not (left[j] or right[j] or left[j + 1] or right[j + 1])
                and m.key(a2) < m.key(a1)
            ):
                letters[j], letters[j + 1] = letters[j + 1], letters[j]
                return True
        return False

    return _rewrite(p, sort_middles)


def pill_stage3(p: PigmentedWord) -> PigmentedWord:
    return _rewrite(p, _advance_last_occurrence)


def pill_norm(p: PigmentedWord) -> PigmentedWord:
    return pill_stage3(pill_stage2(pill_stage1(p)))


def occurrences(p: PigmentedWord) -> dict[int, int]:
    counts: dict[int, int] = defaultdict(int)
    for v, _ in p.letters:
        counts[v] += 1
    return dict(counts)
