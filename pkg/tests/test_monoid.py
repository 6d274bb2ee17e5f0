import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import MONOIDS, pigments
from pwclone.errors import DomainError, MonoidMismatch, ParseError
from pwclone.monoid import (
    Cyclic,
    Free,
    IntAdd,
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

ABC = Free("abc")


def test_free_multiplication_concatenates():
    assert mmul(ABC, "ba", "bbb") == "babbb"


def test_cyclic_wraps():
    assert mmul(Cyclic(2), 1, 1) == 0


@pytest.mark.parametrize("m", MONOIDS + [NatMax(), Cyclic(5)])
def test_unit_is_neutral_and_prints_as_e(m):
    for a in itertools.islice(m.elements(), 6) if m.size else m.generators():
        assert mmul(m, unit(m), a) == a == mmul(m, a, unit(m))
    assert m.format(unit(m)) == "e"
    assert m.parse("e") == unit(m)


def test_units_per_monoid():
    assert unit(Trivial()) == ()
    assert unit(ABC) == ""
    assert unit(IntAdd()) == 0
    assert unit(NatMax()) == 0


def test_free_order_puts_prefixes_first():
    assert mcmp(ABC, "", "a") == -1
    assert mcmp(ABC, "ab", "b") == -1
    assert mcmp(ABC, "a", "ab") == -1
    assert mcmp(ABC, "ba", "ba") == 0
    assert mcmp(ABC, "c", "ab") == 1


def test_free_order_follows_alphabet_declaration():
    m = Free("ba")
    assert mcmp(m, "b", "a") == -1


@pytest.mark.parametrize("m", MONOIDS)
@given(data=st.data())
def test_associativity(m, data):
    a, b, c = (data.draw(pigments(m)) for _ in range(3))
    assert mmul(m, mmul(m, a, b), c) == mmul(m, a, mmul(m, b, c))


@pytest.mark.parametrize("m", MONOIDS)
@given(data=st.data())
def test_compare_is_a_total_order(m, data):
    a, b, c = (data.draw(pigments(m)) for _ in range(3))
    assert mcmp(m, a, a) == 0
    assert mcmp(m, a, b) == -mcmp(m, b, a)
    if mcmp(m, a, b) <= 0 and mcmp(m, b, c) <= 0:
        assert mcmp(m, a, c) <= 0


@pytest.mark.parametrize("m", MONOIDS + [NatMax()])
@given(data=st.data())
def test_format_parse_round_trip(m, data):
    a = data.draw(pigments(m)) if not isinstance(m, NatMax) else data.draw(st.integers(0, 50))
    assert m.parse(m.format(a)) == a


def test_foreign_elements_are_rejected():
    with pytest.raises(MonoidMismatch):
        mmul(ABC, "ad", "a")
    with pytest.raises(MonoidMismatch):
        mmul(Cyclic(3), 3, 0)
    with pytest.raises(MonoidMismatch):
        mmul(NatMax(), -1, 0)


@pytest.mark.parametrize("alphabet", ["", "aa", "ae", "a^", "a b"])
def test_bad_alphabets(alphabet):
    with pytest.raises(DomainError):
        Free(alphabet)


def test_parse_monoid_forms():
    assert parse_monoid("trivial") == Trivial()
    assert parse_monoid("free:ab") == Free("ab")
    assert parse_monoid("zmod:4") == Cyclic(4)
    assert parse_monoid("int-add") == IntAdd()
    assert parse_monoid("nat-max") == NatMax()
    assert str(parse_monoid("zmod:4")) == "zmod:4"
    assert str(parse_monoid("free:ab")) == "free:ab"
    with pytest.raises(ParseError):
        parse_monoid("group:3")
    with pytest.raises(ParseError):
        parse_monoid("zmod:x")


def test_table_monoid_from_file(tmp_path):
    path = tmp_path / "z2.txt"
    path.write_text("e s\ne\ne s\ns e\n")
    m = parse_monoid(f"table:{path}")
    s = m.parse("s")
    assert mmul(m, s, s) == unit(m)
    assert m.size == 2
    assert str(m) == f"table:{path}"


def test_table_rejects_non_associative():
    # (aa)b = bb = a but a(ab) = aa = b
    with pytest.raises(DomainError):
        Table.from_text("e a b\ne\ne a b\na b a\nb a a\n")


def test_table_rejects_missing_unit():
    with pytest.raises(DomainError):
        Table.from_text("e a\ne\na a\na a\n")


def test_free_length_morphism():
    phi = Morphism.free_length(ABC)
    assert apply_morphism(phi, "ba") == 2
    assert apply_morphism(phi, "") == 0


def test_free_length_into_max_is_not_a_morphism():
    with pytest.raises(DomainError):
        Morphism.free_length(Free("ab"), NatMax())


def test_identity_morphism():
    phi = Morphism.identity(ABC)
    assert apply_morphism(phi, "cab") == "cab"


def test_pointwise_morphism_checks_multiplicativity():
    Morphism.pointwise(Cyclic(4), Cyclic(2), {a: a % 2 for a in range(4)})
    with pytest.raises(DomainError):
        Morphism.pointwise(Cyclic(3), Cyclic(2), {0: 0, 1: 1, 2: 1})


@given(a=pigments(ABC), b=pigments(ABC))
def test_length_is_multiplicative(a, b):
    phi = Morphism.free_length(ABC)
    assert phi.apply(mmul(ABC, a, b)) == phi.apply(a) + phi.apply(b)
