"""반환 법칙, 순서 법칙, 나눗셈 계약의 성질 테스트"""

from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from src.series import (
    Element,
    ModelConfig,
    Ordering,
    add,
    cmp,
    divmod,
    divmod_scalar,
    mul,
    scalar_mul,
    sub,
)
from tests.strategies import elements, nonstandard_elements

ONE = Element.constant(1, 1)
D1 = ModelConfig(dim=1)


@given(elements(), elements(), elements())
def test_semiring_laws(a, b, c):
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(elements(), elements(), elements())
def test_order_is_translation_invariant(a, b, c):
    if cmp(a, b) == Ordering.LESS:
        assert cmp(add(a, c), add(b, c)) == Ordering.LESS
        if not c.is_zero():
            assert cmp(mul(a, c), mul(b, c)) == Ordering.LESS


@given(st.integers(min_value=1, max_value=2).flatmap(lambda d: st.tuples(elements(d), elements(d))))
def test_cmp_agrees_with_sign_of_difference(pair):
    """항을 나란히 훑는 비교와 차이의 부호가 같음"""
    a, b = pair
    sign = (a.to_series() - b.to_series()).signum()
    assert cmp(a, b) == {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}[sign]


@given(elements(2), elements(2), elements(2))
def test_cmp_is_transitive_on_unsorted_triples(a, b, c):
    for x, y, z in permutations([a, b, c]):
        if cmp(x, y) == Ordering.LESS and cmp(y, z) == Ordering.LESS:
            assert cmp(x, z) == Ordering.LESS


@given(elements(), elements())
def test_discreteness(a, b):
    """a < b < a + 1 인 b는 없음"""
    assert not (cmp(a, b) == Ordering.LESS and cmp(b, add(a, ONE)) == Ordering.LESS)


@given(elements(), elements())
def test_sub_inverts_add(a, b):
    assert sub(add(a, b), b) == a


@given(elements(), st.integers(min_value=1, max_value=12))
def test_divmod_scalar_contract(a, n):
    q, r = divmod_scalar(a, n)
    assert add(scalar_mul(q, n), Element.constant(r, 1)) == a
    assert 0 <= r < n


@settings(max_examples=50)
@given(elements(), nonstandard_elements())
def test_divmod_contract_in_one_dimension(a, b):
    """d=1 나눗셈은 항상 끝나고 계약을 만족"""
    q, r = divmod(a, b, D1)
    assert add(mul(q, b), r) == a
    assert cmp(r, b) == Ordering.LESS
