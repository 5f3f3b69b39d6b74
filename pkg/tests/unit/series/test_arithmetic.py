"""반환 연산과 순서 단위 테스트"""

import pytest

from src.core.exceptions import DimensionMismatch, InvariantViolation, Underflow
from src.series import Element, Exponent, Ordering, add, cmp, deg, is_standard, mul, pow, sub


def test_add_merges_like_terms(el):
    """같은 지수의 계수 합치기"""
    # Given
    a, b = el("t^2 + t"), el("t + 1")

    # When
    result = add(a, b)

    # Then
    assert result == el("t^2 + 2*t + 1")


def test_add_zero_is_identity(el):
    # Given
    a = el("3*t^(3/2) + 4")

    # When / Then
    assert add(a, Element.zero(1)) == a


def test_add_in_two_dimensions_keeps_lex_order(el2):
    """d=2 사전식 병합"""
    # When
    result = add(el2("t^(1,0)"), el2("t^(0,1)"))

    # Then
    assert len(result.terms) == 2
    assert deg(result) == Exponent.of(1, 0)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("t", "t", "t^2"),
        ("t + 1", "t - 1 + 2", "t^2 + 2*t + 1"),
    ],
)
def test_mul(el, a, b, expected):
    assert mul(el(a), el(b)) == el(expected)


def test_mul_adds_exponents_in_two_dimensions(el2):
    assert mul(el2("t^(1,0)"), el2("t^(0,1)")) == el2("t^(1,1)")


def test_sub_returns_unique_difference(el):
    # Given
    a, b = el("t^2 + 2*t"), el("t")

    # When
    result = sub(a, b)

    # Then
    assert result == el("t^2 + t")
    assert add(b, result) == a


def test_sub_self_is_zero(el):
    a = el("t^2 + 5")
    assert sub(a, a).is_zero()


def test_sub_underflow(el):
    """작은 원소에서 큰 원소를 빼면 Underflow"""
    with pytest.raises(Underflow):
        sub(el("t"), el("t^2"))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("t", "1000", Ordering.GREATER),
        ("t + 1", "t + 2", Ordering.LESS),
        ("t^2 + t", "t^2 + t", Ordering.EQUAL),
    ],
)
def test_cmp(el, a, b, expected):
    assert cmp(el(a), el(b)) == expected


def test_cmp_is_lexicographic_in_two_dimensions(el2):
    assert cmp(el2("t^(1,0)"), el2("t^(0,9)")) == Ordering.GREATER


def test_pow(el):
    assert pow(el("t"), 3) == el("t^3")
    assert pow(el("t + 1"), 2) == el("t^2 + 2*t + 1")
    assert pow(el("t^2 + 7"), 0) == Element.constant(1, 1)


def test_deg_and_is_standard(el):
    # Then
    assert deg(el("t^2 + t")) == Exponent.of(2)
    assert deg(el("5")) == Exponent.zero(1)
    assert deg(Element.zero(1)) is None
    assert is_standard(el("7"))
    assert is_standard(Element.zero(1))
    assert not is_standard(el("t"))


def test_mixed_dimensions_are_rejected(el, el2):
    with pytest.raises(DimensionMismatch):
        add(el("t"), el2("t"))


def test_element_invariants(el):
    """모델 밖의 값은 만들 수 없음"""
    with pytest.raises(InvariantViolation):
        el("t + 1/2")
    with pytest.raises(InvariantViolation):
        el("-t + 3")
    with pytest.raises(InvariantViolation):
        el("0 - 2")
