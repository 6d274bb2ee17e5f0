import json

import pytest

from pwclone.clones import CloneId, equiv, term_equiv
from pwclone.errors import DomainError
from pwclone.monoid import Cyclic, Free, Trivial
from pwclone.normalizers import first_k, sort_norm
from pwclone.suites import SUITES, Budget, check_suite, morphisms_from, presentation_equations
from pwclone.terms import parse_term
from pwclone.words import parse_word, reverse

AB = Free("ab")
T = Trivial()
SMALL = Budget(max_arity=2, max_len=2, samples=60, seed=3)

CLONES = [
    CloneId("P", AB),
    CloneId("WInc", AB),
    CloneId("Arra", AB, 1),
    CloneId("ArraRev", Cyclic(2), 2),
    CloneId("Inc", T, 1),
    CloneId("Magn", AB, 1, 1),
    CloneId("Magn", Cyclic(2), 2, 1),
    CloneId("Stal", AB, 2),
    CloneId("StalRev", T, 1),
    CloneId("Pill", AB, 1, 1),
    CloneId("Pill", T, 1, 2),
]


@pytest.mark.parametrize("suite", SUITES)
@pytest.mark.parametrize("c", CLONES, ids=lambda c: f"{c}/{c.monoid}")
def test_suites_pass_on_correct_clones(c, suite):
    # exhaustive associativity grows fast; length 2 with two pigments is covered by the acceptance run
    budget = Budget(max_arity=2, max_len=1 if suite == "axioms" else 2, samples=40)
    report = check_suite(c, suite, budget)
    assert report.passed, report.render()
    assert all(law.instances > 0 for law in report.laws), report.render()


def test_report_rendering_is_deterministic():
    c = CloneId("Arra", T, 1)
    first = check_suite(c, "congruence", SMALL)
    again = check_suite(c, "congruence", SMALL)
    assert first.render() == again.render()
    lines = first.render().splitlines()
    assert lines[0] == "SUITE congruence clone=arra:1 monoid=trivial seed=3"
    names = [line.split()[1] for line in lines[1:]]
    assert names == sorted(names)
    for line in lines[1:]:
        assert line.startswith("LAW ") and " instances=" in line and line.endswith("status=PASS")


def test_json_report():
    report = check_suite(CloneId("WInc", T), "reversion", SMALL)
    data = json.loads(report.to_text_json())
    assert data["status"] == "PASS"
    assert data["seed"] == 3
    assert {law["name"] for law in data["laws"]} == {"reversion.equivalence", "reversion.involution"}


def test_mutated_normal_form_is_caught():
    c = CloneId("Arra", Cyclic(2), 2)
    report = check_suite(c, "congruence", SMALL, p_symbol=lambda p: first_k(p, 1))
    assert not report.passed
    law = report.law("congruence.p-symbol")
    assert law.counterexample is not None
    assert "status=FAIL counterexample=" in law.line()


def test_wrong_normal_form_for_another_clone_is_caught():
    # sorting is a normal form for WInc, not for Arra(1)
    report = check_suite(CloneId("Arra", T, 1), "congruence", SMALL, p_symbol=sort_norm)
    assert not report.passed


def test_arrangements_are_not_their_own_mirror():
    # the suite compares against the reversed clone; comparing with itself would fail
    c = CloneId("Arra", T, 1)
    p, q = parse_word("1^e 2^e 1^e", T), parse_word("1^e 2^e", T, 2)
    assert equiv(c, p, q)
    assert not equiv(c, reverse(p), reverse(q))
    assert equiv(c.reversed(), reverse(p), reverse(q))
    assert check_suite(c, "reversion", SMALL).passed


def test_presentation_instance_from_magnets():
    eqs = presentation_equations(CloneId("Magn", AB, 1, 1))
    left, right = eqs["middle"][2](["a", "b", ""])
    assert str(left) == "1^a 2^e 1^b 3^e 1^e"
    assert str(right) == "1^a 2^e 3^e 1^e"
    assert check_suite(CloneId("Magn", AB, 1, 1), "presentation", SMALL).passed


def test_presentation_catches_a_false_equation():
    # commutation is not an equation of Arra(1)
    c = CloneId("Arra", T, 1)
    assert not term_equiv(c, parse_term("m(x1,x2)", T), parse_term("m(x2,x1)", T))


def test_morphisms_exercised():
    rules = [phi.rule for phi in morphisms_from(AB)]
    assert rules == ["identity", "free-length"]
    assert [phi.rule for phi in morphisms_from(Cyclic(2))] == ["identity", "pointwise"]
    assert [phi.rule for phi in morphisms_from(T)] == ["identity"]


def test_bad_suite_and_budget():
    with pytest.raises(DomainError):
        check_suite(CloneId("P", T), "nonsense")
    with pytest.raises(DomainError):
        check_suite(CloneId("P", T), "axioms", Budget(max_len=-1))


@pytest.mark.parametrize("c", [CloneId("Magn", T, 1, 1), CloneId("Arra", Cyclic(2), 1)], ids=str)
def test_axioms_on_quotients_at_length_two(c):
    report = check_suite(c, "axioms", Budget(max_arity=2, max_len=2, samples=100))
    assert report.passed, report.render()
    assert report.law("clone.associativity").instances > 4000
