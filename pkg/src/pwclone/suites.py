"""Law-checking suites over a quotient clone.

Each suite checks a handful of named laws on an exhaustive domain of small
words plus seeded random instances, and returns a deterministic report.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .clones import CloneId, all_words, class_key, clone_superpose, equiv, normal_form, term_equiv
from .errors import DomainError
from .monoid import Free, IntAdd, Monoid, Morphism, NatMax, Trivial
from .terms import Mul, P, Term, U, Var, frontier, right_comb
from .words import PigmentedWord, map_pigments, projection, reverse, superpose

SUITES = ("axioms", "congruence", "presentation", "functor", "reversion")


@dataclass(frozen=True)
class Budget:
    max_arity: int = 2
    max_len: int = 3
    samples: int = 1000
    seed: int = 0
    pigments: int = 2


@dataclass
class LawResult:
    name: str
    instances: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"LAW {self.name} instances={self.instances} status={status}"
        if not self.passed:
            out += f" counterexample={self.counterexample}"
        return out


@dataclass
class Report:
    clone: str
    monoid: str
    suite: str
    seed: int
    laws: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def law(self, name: str) -> LawResult:
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(name)

    def render(self) -> str:
        head = f"SUITE {self.suite} clone={self.clone} monoid={self.monoid} seed={self.seed}"
        return "\n".join([head] + [law.line() for law in sorted(self.laws, key=lambda x: x.name)])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "clone": self.clone,
            "monoid": self.monoid,
            "seed": self.seed,
            "status": "PASS" if self.passed else "FAIL",
            "laws": [
                {
                    "name": law.name,
                    "instances": law.instances,
                    "status": "PASS" if law.passed else "FAIL",
                    "counterexample": law.counterexample,
                }
                for law in sorted(self.laws, key=lambda x: x.name)
            ],
        }

    def to_text_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class _Tally:
    """Counts instances of one law and keeps the first counterexample."""

    def __init__(self, name: str):
        self.result = LawResult(name)

    def check(self, ok: bool, witness: Callable[[], str]) -> None:
        self.result.instances += 1
        if not ok and self.result.counterexample is None:
            self.result.counterexample = witness()


def _fmt(*words: PigmentedWord | Sequence[PigmentedWord]) -> str:
    parts = []
    for w in words:
        if isinstance(w, PigmentedWord):
            parts.append(str(w))
        else:
            parts.append("<" + ";".join(str(x) for x in w) + ">")
    return "[" + " | ".join(parts) + "]"


def pigment_sample(m: Monoid, size: int) -> list:
    """A small deterministic set of pigments for exhaustive domains."""
    if m.size is not None:
        return list(m.elements())[:size]
    return m.generators()[:size]


def random_pigment(m: Monoid, rng: random.Random):
    if m.size is not None:
        return rng.choice(list(m.elements()))
    if isinstance(m, Free):
        return "".join(rng.choice(m.alphabet) for _ in range(rng.randint(0, 3)))
    if isinstance(m, NatMax):
        return rng.randint(0, 5)
    return rng.randint(-5, 5)


def random_word(n: int, m: Monoid, max_len: int, rng: random.Random) -> PigmentedWord:
    if n == 0:
        return PigmentedWord._raw((), 0, m)
    length = rng.randint(0, max_len)
    letters = tuple((rng.randint(1, n), random_pigment(m, rng)) for _ in range(length))
    return PigmentedWord._raw(letters, n, m)


def _domain(m: Monoid, budget: Budget) -> dict[int, list[PigmentedWord]]:
    pigs = pigment_sample(m, budget.pigments)
    return {n: list(all_words(n, m, budget.max_len if n else 0, pigs)) for n in range(budget.max_arity + 1)}


def _group(c: CloneId, words: Iterable[PigmentedWord]) -> dict:
    groups: dict = {}
    for w in words:
        groups.setdefault(class_key(c, w), []).append(w)
    return groups


def _reduce(c: CloneId) -> Callable[[PigmentedWord], PigmentedWord]:
    if c.has_normal_form and c.variety != "P":
        return lambda p: normal_form(c, p)
    return lambda p: p


def _compose(c: CloneId, p: PigmentedWord, args: Sequence[PigmentedWord], arity: int) -> PigmentedWord:
    if c.variety != "P" and c.has_normal_form:
        return clone_superpose(c, p, args, arity)
    return superpose(p, args, arity)


def _same(c: CloneId, p: PigmentedWord, q: PigmentedWord) -> bool:
    return p == q if c.has_normal_form else equiv(c, p, q)


def _axioms(c: CloneId, budget: Budget) -> list[LawResult]:
    m = c.monoid
    red = _reduce(c)
    dom = {n: sorted({red(p) for p in ws}, key=lambda w: (len(w), str(w))) for n, ws in _domain(m, budget).items()}
    arities = range(budget.max_arity + 1)
    same = (lambda p, q: p == q) if c.has_normal_form else (lambda p, q: equiv(c, p, q))
    proj_left = _Tally("clone.projection-left")
    proj_right = _Tally("clone.projection-right")
    assoc = _Tally("clone.associativity")

    for n in arities:
        projs = [projection(i, n, m) for i in range(1, n + 1)]
        for p in dom[n]:
            got = _compose(c, p, projs, n)
            proj_right.check(_same(c, got, p), lambda: _fmt(p))
        for mm in arities:
            for args in itertools.product(dom[mm], repeat=n):
                for i in range(1, n + 1):
                    got = _compose(c, projs[i - 1], args, mm)
                    proj_left.check(_same(c, got, args[i - 1]), lambda: _fmt(projs[i - 1], args))

    if c.variety == "P" or not c.has_normal_form:
        sup = superpose
    else:
        def sup(p, args, arity):
            return clone_superpose(c, p, args, arity)

    for n, mm, k in itertools.product(arities, repeat=3):
        zs_all = list(itertools.product(dom[k], repeat=mm))
        # inner[y][z] = y<zs_all[z]>, shared by every outer word
        inner = [[sup(y, zs, k) for zs in zs_all] for y in dom[mm]]
        lhs_rows: dict = {}
        for yi in itertools.product(range(len(dom[mm])), repeat=n):
            ys = [dom[mm][i] for i in yi]
            # cols[z] = (y_1<zs>, ..., y_n<zs>)
            cols = list(zip(*(inner[i] for i in yi))) if n else [()] * len(zs_all)
            for x in dom[n]:
                xy = sup(x, ys, mm)
                # distinct (x, ys) often give the same xy; its row of left sides is shared
                lhs = lhs_rows.get(xy)
                if lhs is None:
                    lhs = lhs_rows[xy] = [sup(xy, zs, k) for zs in zs_all]
                if c.has_normal_form:
                    bad = [zs for zs, col, left in zip(zs_all, cols, lhs) if left != sup(x, col, k)]
                else:
                    bad = [zs for zs, col, left in zip(zs_all, cols, lhs) if not same(left, sup(x, col, k))]
                assoc.result.instances += len(zs_all)
                if bad and assoc.result.counterexample is None:
                    assoc.result.counterexample = _fmt(x, ys, bad[0])

    rng = random.Random(budget.seed)
    big_arity, big_len = budget.max_arity + 2, budget.max_len + 2
    for _ in range(budget.samples):
        n, mm, k = (rng.randint(1, big_arity) for _ in range(3))
        x = red(random_word(n, m, big_len, rng))
        ys = [red(random_word(mm, m, big_len, rng)) for _ in range(n)]
        zs = [red(random_word(k, m, big_len, rng)) for _ in range(mm)]
        lhs = _compose(c, _compose(c, x, ys, mm), zs, k)
        rhs = _compose(c, x, [_compose(c, y, zs, k) for y in ys], k)
        assoc.check(_same(c, lhs, rhs), lambda: _fmt(x, ys, zs))
        i = rng.randint(1, n)
        got = _compose(c, projection(i, n, m), ys, mm)
        proj_left.check(_same(c, got, ys[i - 1]), lambda: _fmt(projection(i, n, m), ys))
        got = _compose(c, x, [projection(j, n, m) for j in range(1, n + 1)], n)
        proj_right.check(_same(c, got, x), lambda: _fmt(x))
    return [proj_left.result, proj_right.result, assoc.result]


def _arg_tuples(dom: dict[int, list[PigmentedWord]], n: int, m: int, budget: int) -> Iterable[tuple]:
    """Tuples of ``n`` arity-``m`` words whose lengths sum to at most ``budget``."""
    by_len: dict[int, list] = {}
    for w in dom[m]:
        by_len.setdefault(len(w), []).append(w)

    def go(slots: int, left: int):
        if slots == 0:
            yield ()
            return
        for length in range(left + 1):
            for w in by_len.get(length, ()):
                for rest in go(slots - 1, left - length):
                    yield (w,) + rest

    return go(n, budget)


def _congruence(c: CloneId, budget: Budget, p_symbol=None) -> list[LawResult]:
    m = c.monoid
    dom = _domain(m, budget)
    arities = range(budget.max_arity + 1)
    laws = []
    rng = random.Random(budget.seed)

    def instances():
        # exhaustive: p up to max_len letters, argument tuples up to max_len letters in total
        for n, mm in itertools.product(arities, repeat=2):
            tuples = list(_arg_tuples(dom, n, mm, budget.max_len))
            for p in dom[n]:
                for args in tuples:
                    yield p, args, mm
        big_arity, big_len = budget.max_arity + 1, budget.max_len + 1
        for _ in range(budget.samples):
            n, mm = rng.randint(1, big_arity), rng.randint(1, big_arity)
            p = random_word(n, m, big_len, rng)
            yield p, [random_word(mm, m, big_len, rng) for _ in range(n)], mm

    if c.has_normal_form or p_symbol is not None:
        sym = p_symbol if p_symbol is not None else (lambda w: normal_form(c, w))
        law = _Tally("congruence.p-symbol")
        fixed = _Tally("p-symbol.idempotent")
        fiber = _Tally("p-symbol.fiber")
        cache: dict = {}

        def nf(w):
            got = cache.get(w)
            if got is None:
                got = cache[w] = sym(w)
            return got

        for p, args, mm in instances():
            lhs = superpose(p, args, mm)
            rhs = superpose(nf(p), [nf(a) for a in args], mm)
            law.check(equiv(c, lhs, rhs), lambda: _fmt(p, args))
        for n in arities:
            for p in dom[n]:
                fixed.check(nf(nf(p)) == nf(p), lambda: _fmt(p))
                fiber.check(equiv(c, p, nf(p)), lambda: _fmt(p))
        laws += [law.result, fixed.result, fiber.result]

    # substitution of equivalent words must give equivalent results
    subst = _Tally("congruence.substitution")
    classes = {n: _group(c, dom[n]) for n in arities}
    for n, mm in itertools.product(range(1, budget.max_arity + 1), repeat=2):
        for _ in range(max(1, budget.samples // 4)):
            p = rng.choice(dom[n])
            q = rng.choice(classes[n][class_key(c, p)])
            args = [rng.choice(dom[mm]) for _ in range(n)]
            brgs = [rng.choice(classes[mm][class_key(c, a)]) for a in args]
            lhs, rhs = superpose(p, args, mm), superpose(q, brgs, mm)
            subst.check(equiv(c, lhs, rhs), lambda: _fmt(p, args, q, brgs))
    laws.append(subst.result)
    return laws


def _words(m: Monoid, arity: int, letters: Sequence[tuple[int, object]]) -> PigmentedWord:
    return PigmentedWord._raw(tuple((v, a) for v, a in letters), arity, m)


def presentation_equations(c: CloneId) -> dict[str, tuple[int, int, Callable]]:
    """Defining equations of ``c`` beyond the pigmented-monoid relations.

    Maps a law name to ``(arity, pigment count, builder)``; the builder takes
    a pigment list and returns the chain of words that must be equivalent.
    """
    m = c.monoid
    e = m.unit
    v, k = c.variety, c.k
    eqs: dict[str, tuple[int, int, Callable]] = {}

    def word(arity, *letters):
        return _words(m, arity, letters)

    if v in ("WInc", "Inc"):
        eqs["commute"] = (2, 0, lambda a: [word(2, (1, e), (2, e)), word(2, (2, e), (1, e))])
    if v == "Inc":
        eqs["truncate"] = (1, 0, lambda a: [word(1, *[(1, e)] * (k + 1)), word(1, *[(1, e)] * k)])
    if v in ("Arra", "ArraRev"):

        def arra(a):
            long = []
            for i in range(k):
                long += [(1, a[i]), (i + 2, e)]
            return [word(k + 1, *long, (1, a[k])), word(k + 1, *long)]

        eqs["truncate"] = (k + 1, k + 1, arra)
    if v == "Magn" and (c.k, c.k2) == (1, 1):
        eqs["idempotent"] = (1, 0, lambda a: [word(1, (1, e), (1, e)), word(1, (1, e))])
        eqs["middle"] = (
            3,
            3,
            lambda a: [
                word(3, (1, a[0]), (2, e), (1, a[1]), (3, e), (1, a[2])),
                word(3, (1, a[0]), (2, e), (3, e), (1, a[2])),
            ],
        )
    if v in ("Stal", "StalRev"):

        def stal(a):
            head = [(1, x) for x in a[:k]]
            return [word(2, *head, (1, a[k]), (2, e)), word(2, *head, (2, e), (1, a[k]))]

        eqs["exchange"] = (2, k + 1, stal)
    if v == "Pill" and (c.k, c.k2) == (1, 1):
        eqs["middle"] = (
            3,
            3,
            lambda a: [
                word(3, (1, a[0]), (1, a[1]), (2, e), (3, e), (1, a[2])),
                word(3, (1, a[0]), (2, e), (1, a[1]), (3, e), (1, a[2])),
                word(3, (1, a[0]), (2, e), (3, e), (1, a[1]), (1, a[2])),
            ],
        )
        eqs["exchange"] = (
            4,
            4,
            lambda a: [
                word(4, (1, a[0]), (2, e), (3, a[2]), (1, a[1]), (4, e), (3, a[3])),
                word(4, (1, a[0]), (2, e), (1, a[1]), (3, a[2]), (4, e), (3, a[3])),
            ],
        )
    if v in ("ArraRev", "StalRev"):
        eqs = {name: (n, cnt, lambda a, b=build: [reverse(w) for w in b(a)]) for name, (n, cnt, build) in eqs.items()}
    return eqs


def monoid_relations(m: Monoid) -> dict[str, tuple[int, int, Callable]]:
    """The six pigmented-monoid relations as term pairs."""
    x1, x2, x3 = Var(1), Var(2), Var(3)

    def term(node, n):
        return Term(node, n, m)

    return {
        "monoid.associativity": (3, 0, lambda a: [term(Mul(Mul(x1, x2), x3), 3), term(Mul(x1, Mul(x2, x3)), 3)]),
        "monoid.unit": (1, 0, lambda a: [term(Mul(U(), x1), 1), term(x1, 1), term(Mul(x1, U()), 1)]),
        "pigment.distributes": (
            2,
            1,
            lambda a: [term(P(a[0], Mul(x1, x2)), 2), term(Mul(P(a[0], x1), P(a[0], x2)), 2)],
        ),
        "pigment.unit-fixed": (0, 1, lambda a: [term(P(a[0], U()), 0), term(U(), 0)]),
        "pigment.action": (
            1,
            2,
            lambda a: [term(P(a[0], P(a[1], x1)), 1), term(P(m.mul(a[0], a[1]), x1), 1)],
        ),
        "pigment.neutral": (1, 0, lambda a: [term(P(m.unit, x1), 1), term(x1, 1)]),
    }


def _presentation(c: CloneId, budget: Budget) -> list[LawResult]:
    m = c.monoid
    rng = random.Random(budget.seed)
    laws = []

    def run(name: str, arity: int, count: int, build: Callable, as_terms: bool):
        tally = _Tally(name)
        for s in range(max(budget.samples, 1)):
            pigs = [random_pigment(m, rng) for _ in range(count)]
            chain = build(pigs)
            terms = chain if as_terms else [right_comb(w) for w in chain]
            for t in terms[1:]:
                tally.check(term_equiv(c, terms[0], t), lambda: " ~ ".join(str(x) for x in terms))
            if arity == 0 or s == 0:
                continue
            # equations are closed under substitution
            mm = rng.randint(1, budget.max_arity + 1)
            args = [random_word(mm, m, budget.max_len, rng) for _ in range(arity)]
            words = [frontier(t) for t in terms]
            images = [superpose(w, args, mm) for w in words]
            for w in images[1:]:
                tally.check(equiv(c, images[0], w), lambda: _fmt(*words, args))
        laws.append(tally.result)

    for name, (arity, count, build) in monoid_relations(m).items():
        run(name, arity, count, build, True)
    for name, (arity, count, build) in presentation_equations(c).items():
        run(f"{c.variety.lower()}.{name}", arity, count, build, False)
    return laws


def morphisms_from(m: Monoid) -> list[Morphism]:
    """Morphisms out of ``m`` exercised by the functor suite."""
    out = [Morphism.identity(m)]
    if isinstance(m, Free):
        out.append(Morphism.free_length(m, IntAdd()))
    if m.size is not None and not isinstance(m, Trivial):
        out.append(Morphism.to_trivial(m))
    return out


def _same_variety(c: CloneId, m: Monoid) -> CloneId | None:
    if c.variety == "Inc" and not isinstance(m, Trivial):
        return None
    return CloneId(c.variety, m, c.k, c.k2)


def _functor(c: CloneId, budget: Budget) -> list[LawResult]:
    m = c.monoid
    rng = random.Random(budget.seed)
    dom = _domain(m, budget)
    laws = []
    for phi in morphisms_from(m):
        tag = phi.rule if phi.rule != "pointwise" else f"pointwise-{phi.target}"
        proj = _Tally(f"functor.{tag}.projections")
        comp = _Tally(f"functor.{tag}.superposition")
        quot = _Tally(f"functor.{tag}.quotient")
        for n in range(1, budget.max_arity + 1):
            for i in range(1, n + 1):
                got = map_pigments(phi, projection(i, n, m))
                proj.check(got == projection(i, n, phi.target), lambda: f"{i},{n}")
        target = _same_variety(c, phi.target)
        groups = {n: _group(c, dom[n]) for n in dom}
        for _ in range(budget.samples):
            n, mm = rng.randint(1, budget.max_arity + 1), rng.randint(0, budget.max_arity + 1)
            p = random_word(n, m, budget.max_len + 1, rng)
            args = [random_word(mm, m, budget.max_len, rng) for _ in range(n)]
            lhs = map_pigments(phi, superpose(p, args, mm))
            rhs = superpose(map_pigments(phi, p), [map_pigments(phi, a) for a in args], mm)
            comp.check(lhs == rhs, lambda: _fmt(p, args))
            if target is not None and n <= budget.max_arity:
                q = rng.choice(dom[n])
                if equiv(c, p, q):
                    ok = equiv(target, map_pigments(phi, p), map_pigments(phi, q))
                    quot.check(ok, lambda: _fmt(p, q))
                # pairs drawn from one class exercise the implication non-vacuously
                r = rng.choice(groups[n][class_key(c, q)])
                quot.check(equiv(target, map_pigments(phi, q), map_pigments(phi, r)), lambda: _fmt(q, r))
        laws += [proj.result, comp.result]
        if target is not None:
            laws.append(quot.result)
    return laws


def _reversion(c: CloneId, budget: Budget) -> list[LawResult]:
    mirror = c.reversed()
    dom = _domain(c.monoid, budget)
    law = _Tally("reversion.equivalence")
    invol = _Tally("reversion.involution")
    rng = random.Random(budget.seed)
    for n, ws in dom.items():
        keys = [class_key(c, w) for w in ws]
        rkeys = [class_key(mirror, reverse(w)) for w in ws]
        for i, j in itertools.combinations_with_replacement(range(len(ws)), 2):
            law.check((keys[i] == keys[j]) == (rkeys[i] == rkeys[j]), lambda: _fmt(ws[i], ws[j]))
    for _ in range(budget.samples):
        n = rng.randint(1, budget.max_arity + 1)
        p = random_word(n, c.monoid, budget.max_len + 2, rng)
        q = random_word(n, c.monoid, budget.max_len + 2, rng)
        law.check(equiv(c, p, q) == equiv(mirror, reverse(p), reverse(q)), lambda: _fmt(p, q))
        invol.check(reverse(reverse(p)) == p, lambda: _fmt(p))
    return [law.result, invol.result]


def check_suite(c: CloneId, suite: str, budget: Budget | None = None, p_symbol=None) -> Report:
    """Run one suite. ``p_symbol`` replaces the normal form in the congruence suite."""
    budget = budget or Budget()
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if budget.max_arity < 0 or budget.max_len < 0 or budget.samples < 0:
        raise DomainError("budget bounds must be nonnegative")
    if suite == "axioms":
        laws = _axioms(c, budget)
    elif suite == "congruence":
        laws = _congruence(c, budget, p_symbol)
    elif suite == "presentation":
        laws = _presentation(c, budget)
    elif suite == "functor":
        laws = _functor(c, budget)
    else:
        laws = _reversion(c, budget)
    return Report(str(c), str(c.monoid), suite, budget.seed, laws)
