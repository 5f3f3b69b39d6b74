"""나눗셈과 k제곱근 단위 테스트"""

from fractions import Fraction

import pytest

from src.core.exceptions import CoefficientNotRepresentable, NonTerminatingQuotient
from src.series import (
    Element,
    ModelConfig,
    Ordering,
    add,
    ceil_div_scalar,
    cmp,
    divmod,
    divmod_scalar,
    floor_quotient,
    mul,
    root_floor,
)


@pytest.mark.parametrize(
    "a, n, q, r",
    [
        ("t + 1", 2, "1/2*t", 1),
        ("6", 4, "1", 2),
        ("3*t^2 + 5", 3, "t^2 + 1", 2),
    ],
)
def test_divmod_scalar(el, a, n, q, r):
    # When
    quotient, remainder = divmod_scalar(el(a), n)

    # Then
    assert quotient == el(q)
    assert remainder == r


def test_ceil_div_scalar(el):
    assert ceil_div_scalar(el("t^2"), 2) == el("1/2*t^2")
    assert ceil_div_scalar(el("t^2 + 1"), 2) == el("1/2*t^2 + 1")


@pytest.mark.parametrize(
    "a, b, q, r",
    [
        ("t^2 + 1", "t", "t", "1"),
        ("t^2", "t^(3/2)", "t^(1/2)", "0"),
        ("t + 3", "t", "1", "3"),
    ],
)
def test_divmod(el, d1, a, b, q, r):
    # When
    quotient, remainder = divmod(el(a), el(b), d1)

    # Then
    assert quotient == el(q)
    assert remainder == el(r)
    assert add(mul(quotient, el(b)), remainder) == el(a)


def test_divmod_floors_through_negative_tail(el, d1):
    """몫 상수가 정수일 때 음의 꼬리가 남으면 한 칸 내림"""
    # Given: t / (t + 1) = 1 - 1/(t + 1)
    a, b = el("t"), el("t + 1")

    # When
    q, r = divmod(a, b, d1)

    # Then
    assert q.is_zero()
    assert r == a


def test_divmod_with_negative_lower_quotient_term(el, d1):
    # Given: t^2 = (t + 1)(t - 1) + 1
    a, b = el("t^2"), el("t + 1")

    # When
    q, r = divmod(a, b, d1)

    # Then
    assert q == el("t - 1")
    assert r == el("1")


def test_floor_quotient(el, d1):
    assert floor_quotient(el("t + 3"), el("t"), d1) == el("1")
    assert floor_quotient(el("t^2 + 4"), el("1"), d1) == el("t^2 + 4")
    assert floor_quotient(el("t"), el("t^2"), d1).is_zero()


def test_divmod_budget_in_two_dimensions(el2):
    """d=2 에서 끝나지 않는 몫 전개는 예산에서 멈춤"""
    # Given
    config = ModelConfig(dim=2, div_budget=8)
    a, b = el2("t^(2,0)"), el2("t^(1,0) - t^(1,-1)")

    # When / Then
    with pytest.raises(NonTerminatingQuotient):
        divmod(a, b, config)


def test_divmod_small_budget_stops_early(el2):
    config = ModelConfig(dim=2, div_budget=1)
    with pytest.raises(NonTerminatingQuotient):
        divmod(el2("t^(2,0)"), el2("t^(1,0) - t^(0,5)"), config)


@pytest.mark.parametrize(
    "a, k, expected",
    [
        ("t^2", 2, "t"),
        ("t^2 + 2*t", 2, "t"),
        ("t^2 + 2*t + 1", 2, "t + 1"),
        ("17", 2, "4"),
        ("t^3 + 5", 3, "t"),
    ],
)
def test_root_floor(el, d1, a, k, expected):
    # When
    m = root_floor(el(a), k, d1)

    # Then
    assert m == el(expected)


def test_root_floor_contract_on_fractional_exponents(el, d1):
    # Given
    a = el("t^3 + t + 2")

    # When
    m = root_floor(a, 2, d1)

    # Then
    one = Element.constant(1, 1)
    assert cmp(mul(m, m), a) != Ordering.GREATER
    assert cmp(a, mul(add(m, one), add(m, one))) == Ordering.LESS
    assert m.leading.coeff == Fraction(1)


def test_root_floor_irrational_leading_coefficient(el, d1):
    with pytest.raises(CoefficientNotRepresentable):
        root_floor(el("2*t^2"), 2, d1)
