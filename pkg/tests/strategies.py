"""hypothesis 전략: 모델 M의 원소"""

from fractions import Fraction

from hypothesis import strategies as st

from src.series import Element, Exponent, Series

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
positive_rationals = st.fractions(min_value=Fraction(1, 3), max_value=4, max_denominator=3)


def exponents(dim: int = 1):
    if dim == 1:
        return st.builds(Exponent.of, positive_rationals)
    first = st.fractions(min_value=0, max_value=3, max_denominator=2)
    second = st.fractions(min_value=-3, max_value=3, max_denominator=2)
    return st.builds(Exponent.of, first, second).filter(lambda e: e.is_positive())


@st.composite
def elements(draw, dim: int = 1, nonstandard: bool = False):
    """양의 선행 계수와 정수 상수항을 갖는 원소"""
    exps = draw(st.lists(exponents(dim), min_size=1 if nonstandard else 0, max_size=3, unique=True))
    exps = sorted(exps, reverse=True)
    mapping = {}
    for index, exp in enumerate(exps):
        coeff = draw(positive_rationals if index == 0 else small_rationals.filter(lambda x: x != 0))
        mapping[exp] = coeff
    low = 0 if not exps else -5
    mapping[Exponent.zero(dim)] = Fraction(draw(st.integers(min_value=low, max_value=9)))
    return Element.of(Series.from_mapping(mapping, dim))


def nonstandard_elements(dim: int = 1):
    return elements(dim=dim, nonstandard=True)
