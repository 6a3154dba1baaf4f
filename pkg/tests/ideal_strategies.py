"""
Hypothesis strategies shared by the test modules.

Sizes follow the acceptance runs: d <= 4, at most 4 boxes per sum, exponent
denominators at most 12.
"""
from fractions import Fraction

from hypothesis import strategies as st

from core.exponent import INF, ExtExp, Flag, Ray
from core.ideal import AfgIdeal, BoxIdeal, FiniteGeneratorSet, IrreducibleIdeal
from core.monomial import Monomial

MAX_DIM = 4
MAX_BOXES = 4
MAX_DENOMINATOR = 12
MAX_VALUE = 3

dims = st.integers(min_value=1, max_value=MAX_DIM)
flags = st.sampled_from([Flag.CLOSED, Flag.OPEN])


@st.composite
def rationals(draw, max_value: int = MAX_VALUE, max_denominator: int = MAX_DENOMINATOR):
    denominator = draw(st.integers(min_value=1, max_value=max_denominator))
    numerator = draw(st.integers(min_value=0, max_value=max_value * denominator))
    return Fraction(numerator, denominator)


@st.composite
def rays(draw, allow_infinite: bool = True):
    if allow_infinite and draw(st.integers(min_value=0, max_value=9)) == 0:
        return Ray(INF, draw(flags))
    return Ray(ExtExp(draw(rationals())), draw(flags))


@st.composite
def boxes(draw, dim: int, allow_infinite: bool = False):
    return BoxIdeal(tuple(draw(rays(allow_infinite)) for _ in range(dim)))


@st.composite
def irreducibles(draw, dim: int):
    return IrreducibleIdeal(tuple(draw(rays()) for _ in range(dim)))


@st.composite
def afg_ideals(draw, dim: int, max_boxes: int = MAX_BOXES):
    count = draw(st.integers(min_value=0, max_value=max_boxes))
    return AfgIdeal(dim, tuple(draw(boxes(dim, allow_infinite=True)) for _ in range(count)))


@st.composite
def sized_afg(draw, max_dim: int = MAX_DIM, max_boxes: int = MAX_BOXES):
    return draw(afg_ideals(draw(st.integers(min_value=1, max_value=max_dim)), max_boxes))


@st.composite
def afg_pairs(draw, max_dim: int = 3, max_boxes: int = 3):
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    return draw(afg_ideals(dim, max_boxes)), draw(afg_ideals(dim, max_boxes))


@st.composite
def monomials(draw, dim: int):
    return Monomial(tuple(draw(rationals()) for _ in range(dim)))


@st.composite
def generator_sets(draw, dim: int, min_size: int = 0, max_size: int = 3):
    count = draw(st.integers(min_value=min_size, max_value=max_size))
    return FiniteGeneratorSet(dim, tuple(draw(monomials(dim)) for _ in range(count)))
