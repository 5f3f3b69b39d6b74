"""정의 그대로의 증인 검사와 한계 탐색 단위 테스트"""

import pytest

from src.equivalence import (
    BoundN,
    Companion,
    EquivLevel,
    Exhausted,
    SearchBounds,
    check_refutation,
    check_witness,
    companion_pool,
    decide,
    default_bounds,
    search,
)


@pytest.mark.parametrize(
    "level, a, b, n, expected",
    [
        (EquivLevel.E2, "t", "3*t", 4, True),
        (EquivLevel.E2, "t", "3*t", 3, False),
        (EquivLevel.E0, "t + 2", "t", 3, True),
        (EquivLevel.E0, "t + 2", "t", 2, False),
        (EquivLevel.E4, "t^2", "t^3", 2, True),
    ],
)
def test_check_bound_witness(el, level, a, b, n, expected):
    assert check_witness(level, el(a), el(b), BoundN(n=n)) is expected


def test_check_companion_witness(el, el2):
    # Then
    assert check_witness(EquivLevel.E1, el("t^2 + t"), el("t^2"), Companion(c=el("t^(3/2) + 1")))
    assert check_witness(EquivLevel.E3, el2("t^(1,0)"), el2("t^(1,5)"), Companion(c=el2("t^(0,6)")))
    assert not check_witness(EquivLevel.E3, el2("t^(1,0)"), el2("t^(1,5)"), Companion(c=el2("t^(1,0)")))


def test_witness_of_wrong_shape_is_rejected(el, el2):
    # Then
    assert not check_witness(EquivLevel.E1, el("t"), el("t"), BoundN(n=3))
    assert not check_witness(EquivLevel.E0, el("t"), el("t"), Companion(c=el("1")))
    assert not check_witness(EquivLevel.E1, el("t"), el("t"), Companion(c=el2("t^(0,1)")))


def test_search_finds_minimal_bound(el):
    # When
    found = search(EquivLevel.E0, el("t + 2"), el("t"), SearchBounds(n_max=8))

    # Then
    assert found == BoundN(n=3)


def test_search_exhausts_on_nonequivalent(el):
    # When
    found = search(EquivLevel.E2, el("t"), el("t^2"), SearchBounds(n_max=64))

    # Then
    assert isinstance(found, Exhausted)
    assert found.n_max == 64


def test_search_finds_companion_in_pool(el2):
    # Given
    a, b = el2("t^(1,0)"), el2("t^(1,3)")
    bounds = SearchBounds(n_max=2, companion_pool=companion_pool(a, b))

    # When
    found = search(EquivLevel.E3, a, b, bounds)

    # Then
    assert isinstance(found, Companion)
    assert check_witness(EquivLevel.E3, a, b, found)


def test_default_bounds_extends_past_seed_witness(el):
    # When
    bounds = default_bounds(el("t + 20"), el("t"), n_max=4, seed_witness=BoundN(n=21))

    # Then
    assert bounds.n_max == 22
    assert search(EquivLevel.E0, el("t + 20"), el("t"), bounds) == BoundN(n=21)


def test_check_refutation(el, d1):
    # Given
    a, b = el("t"), el("t^2")
    negative = decide(EquivLevel.E2, a, b, d1)
    positive = decide(EquivLevel.E4, a, b, d1)

    # Then
    assert check_refutation(EquivLevel.E2, a, b, negative, default_bounds(a, b, 16))
    assert not check_refutation(EquivLevel.E4, a, b, positive, default_bounds(a, b, 16))
