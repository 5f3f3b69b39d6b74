"""E2 / E3 쌍에서 자기동형사상 만들기 단위 테스트"""

import pytest

from src.automorph import (
    Compose,
    E0ClassShift,
    E2Affine,
    E3Shift,
    Identity,
    Inverse,
    anchor_probes,
    apply,
    apply_inverse,
    build_from_e2,
    build_from_e3,
    e5_closure_under_sum,
    extend_initial_segment,
    validate,
)
from src.core.exceptions import NotE2Equivalent, NotE3Equivalent
from src.series import add


def test_build_from_e2_with_remainder(el, d1):
    """(t, 2t+1): n=3, c=t/2, 나머지 1"""
    # Given
    a, b = el("t"), el("2*t + 1")

    # When
    f = build_from_e2(a, b, d1)

    # Then
    assert isinstance(f, E2Affine)
    assert (f.n, f.m, f.path) == (3, 1, "k7")
    assert f.c == el("1/2*t")
    assert apply(f, a) == b
    assert apply_inverse(f, b) == a
    assert validate(f, anchor_probes([a, b])).passed


def test_build_from_e2_exact_multiple(el, d1):
    """b = 2a 경계는 b-1 로 보낸 뒤 한 칸 이동"""
    # Given
    a, b = el("t"), el("2*t")

    # When
    f = build_from_e2(a, b, d1)

    # Then
    assert isinstance(f, Compose)
    assert isinstance(f.parts[0], E0ClassShift)
    assert apply(f, a) == b
    assert validate(f, anchor_probes([a, b])).passed


def test_build_from_e2_trivial_cases(el, d1):
    # Then
    assert build_from_e2(el("t^2 + 1"), el("t^2 + 1"), d1) == Identity()
    shift = build_from_e2(el("t + 1"), el("t + 4"), d1)
    assert shift == E0ClassShift(anchor=el("t + 1"), offset=3)


def test_build_from_e2_downward_is_inverse(el, d1):
    # Given
    a, b = el("3*t + 2"), el("t")

    # When
    f = build_from_e2(a, b, d1)

    # Then
    assert isinstance(f, Inverse)
    assert apply(f, a) == b
    assert validate(f, anchor_probes([b, a])).passed


def test_build_from_e2_rejects_other_degrees(el, d1):
    with pytest.raises(NotE2Equivalent):
        build_from_e2(el("t"), el("t^2"), d1)


def test_build_from_e3_normalizes_by_monomial(el2, d2):
    """(t^(1,0), t^(1,1)): c = t^(0,1) 하나로 끝남"""
    # Given
    a1, a2 = el2("t^(1,0)"), el2("t^(1,1)")

    # When
    f = build_from_e3(a1, a2, d2)

    # Then
    assert isinstance(f, E3Shift)
    assert f.c == el2("t^(0,1)")
    assert apply(f, a1) == a2
    assert validate(f, anchor_probes([a1, a2])).passed


def test_build_from_e3_composes_with_e2(el2, d2):
    # Given
    a1, a2 = el2("t^(1,0) + 3"), el2("2*t^(1,2) + 1")

    # When
    f = build_from_e3(a1, a2, d2)

    # Then
    assert isinstance(f, Compose)
    assert apply(f, a1) == a2
    assert validate(f, anchor_probes([a1, a2])).passed


def test_build_from_e3_delegates_in_one_dimension(el, d1):
    # When
    f = build_from_e3(el("t"), el("3*t"), d1)

    # Then
    assert apply(f, el("t")) == el("3*t")


def test_build_from_e3_rejects_other_first_components(el2, d2):
    with pytest.raises(NotE3Equivalent):
        build_from_e3(el2("t^(1,0)"), el2("t^(2,0)"), d2)


def test_extend_initial_segment(el, d1):
    """x >= a 에서 b + (x - a)"""
    # Given
    a, b = el("t"), el("2*t + 1")
    f_below = build_from_e2(a, b, d1)

    # When
    g = extend_initial_segment(f_below, a, b)

    # Then
    assert apply(g, a) == b
    assert apply(g, el("t + 5")) == el("2*t + 6")
    assert apply(g, el("1/2*t")) == apply(f_below, el("1/2*t"))
    assert validate(g, anchor_probes([a, b])).passed


def test_extend_identity_segment_is_identity(el):
    # When
    g = extend_initial_segment(Identity(), el("t"), el("t"))

    # Then
    for x in anchor_probes([el("t")]):
        assert apply(g, x) == x


def test_e5_closure_under_sum(el, d1):
    # Given
    a1, b1 = el("t"), el("2*t + 1")
    a2, b2 = el("t"), el("3*t")
    f1, f2 = build_from_e2(a1, b1, d1), build_from_e2(a2, b2, d1)

    # When
    g = e5_closure_under_sum(f1, a1, f2)

    # Then
    assert apply(g, add(a1, a2)) == add(b1, b2)
    assert validate(g, anchor_probes([a1, add(a1, a2), add(b1, b2)])).passed
