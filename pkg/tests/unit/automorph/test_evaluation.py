"""기술자 평가, 역, 합성 단위 테스트"""

from src.automorph import (
    E0ClassShift,
    Identity,
    anchor_probes,
    apply,
    apply_inverse,
    build_from_e2,
    compose,
    invert,
)


def test_apply_identity(el):
    x = el("t^2 + 3*t")
    assert apply(Identity(), x) == x


def test_e0_class_shift_moves_only_its_class(el):
    # Given
    shift = E0ClassShift(anchor=el("t"), offset=1)

    # Then
    assert apply(shift, el("t + 4")) == el("t + 5")
    assert apply(shift, el("t^2")) == el("t^2")
    assert apply(shift, el("7")) == el("7")


def test_invert(el):
    # Given
    shift = E0ClassShift(anchor=el("t"), offset=1)

    # Then
    assert invert(Identity()) == Identity()
    assert invert(shift) == E0ClassShift(anchor=el("t"), offset=-1)


def test_compose_with_inverse_is_identity_on_probes(el, d1):
    # Given
    a, b = el("t"), el("2*t + 1")
    f = build_from_e2(a, b, d1)

    # When
    round_trip = compose(f, invert(f))

    # Then
    for x in anchor_probes([a, b]):
        assert apply(round_trip, x) == x
        assert apply_inverse(f, apply(f, x)) == x


def test_compose_applies_right_to_left(el):
    # Given
    first = E0ClassShift(anchor=el("t"), offset=2)
    second = E0ClassShift(anchor=el("t"), offset=-1)

    # When
    both = compose(second, first)

    # Then
    assert apply(both, el("t")) == el("t + 1")
    assert compose(first, Identity()) == first
