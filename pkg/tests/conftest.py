import hypothesis.strategies as st
from hypothesis import settings

from pwclone.monoid import Cyclic, Free, IntAdd, Trivial
from pwclone.words import PigmentedWord

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

MONOIDS = [Trivial(), Free("ab"), Cyclic(3), IntAdd()]


def pigments(m):
    if isinstance(m, Free):
        return st.text(alphabet=m.alphabet, max_size=3)
    if isinstance(m, IntAdd):
        return st.integers(-4, 4)
    return st.sampled_from(list(m.elements()))


def words(m, arity, max_len=6):
    if arity == 0:
        return st.just(PigmentedWord((), 0, m))
    letter = st.tuples(st.integers(1, arity), pigments(m))
    return st.lists(letter, max_size=max_len).map(lambda xs: PigmentedWord(xs, arity, m))


@st.composite
def word_in(draw, m, arity=None, max_len=6):
    n = draw(st.integers(1, 4)) if arity is None else arity
    return draw(words(m, n, max_len))


@st.composite
def superposition_instance(draw, m, max_len=4):
    n = draw(st.integers(0, 3))
    k = draw(st.integers(0, 3))
    p = draw(words(m, n, max_len))
    args = [draw(words(m, k, max_len)) for _ in range(n)]
    return p, args, k
