"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from maxclass.arrangement import Arrangement, Hyperplane, validate
from maxclass.concepts import ConceptClass
from maxclass.lifting import construct


@st.composite
def classes(draw, max_n=5, min_size=1):
    n = draw(st.integers(1, max_n))
    pts = draw(st.sets(st.integers(0, (1 << n) - 1), min_size=min_size, max_size=1 << n))
    return ConceptClass(n, frozenset(pts))


@st.composite
def maximum_classes(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(0, n))
    pool = construct(n, d)
    return draw(st.sampled_from(pool))


rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def simple_arrangements(draw, dim=2, min_n=None, max_n=5):
    n = draw(st.integers(min_n or dim, max_n))
    planes = tuple(
        Hyperplane(tuple(draw(rationals) for _ in range(dim)), draw(rationals)) for _ in range(n)
    )
    A = Arrangement(dim, planes)
    assume(validate(A))
    return A
