"""클래스 경계 수열 단위 테스트"""

import pytest

from src.analysis import (
    Direction,
    b11_predicate,
    b11_seq,
    certify_b11_term,
    check_cofinality,
    e0_seq,
    e1_seq,
    e2_seq,
    passing_n,
)
from src.core.exceptions import CoefficientNotRepresentable, InvariantViolation, StandardInput
from src.equivalence import EquivLevel


def _terms(el, texts):
    return [el(text) for text in texts]


def test_e0_sequences(el):
    # When
    up = e0_seq(el("t"), 3, Direction.UP)
    down = e0_seq(el("t"), 2, Direction.DOWN)

    # Then
    assert up.terms == _terms(el, ["t", "t + 1", "t + 2"])
    assert down.terms == _terms(el, ["t", "t - 1"])
    assert up.monotone == "increasing"
    assert down.monotone == "decreasing"


def test_e2_sequences(el):
    # When
    up = e2_seq(el("t^2"), 3, Direction.UP)
    down = e2_seq(el("t^2"), 3, Direction.DOWN)

    # Then
    assert up.terms == _terms(el, ["t^2", "2*t^2", "3*t^2"])
    assert down.terms == _terms(el, ["t^2", "1/2*t^2", "1/3*t^2"])


def test_e1_sequences_approach_from_outside(el):
    # When
    up = e1_seq(el("t"), 2, Direction.UP)
    down = e1_seq(el("t"), 2, Direction.DOWN)

    # Then
    assert up.terms == _terms(el, ["3/2*t", "5/4*t"])
    assert down.terms == _terms(el, ["1/2*t", "3/4*t"])
    assert up.monotone == "decreasing"
    assert down.monotone == "increasing"


def test_cofinality_passes_within_witness_bound(el):
    """t+17 은 n=18 에서 처음 넘음"""
    assert check_cofinality(EquivLevel.E0, el("t"), el("t + 17"), Direction.UP) == (18, 18)


def test_coinitiality_of_e2_sequence(el):
    # When
    found, bound = check_cofinality(EquivLevel.E2, el("t^2"), el("1/4*t^2"), Direction.DOWN)

    # Then
    assert found == 5
    assert bound == 6


def test_cofinality_only_for_bounded_levels(el):
    with pytest.raises(InvariantViolation):
        check_cofinality(EquivLevel.E1, el("t"), el("t + 1"), Direction.UP)


def test_passing_n(el):
    # Given
    sequence = e2_seq(el("t"), 4, Direction.UP)

    # Then
    assert passing_n(sequence, el("5/2*t")) == 3
    assert passing_n(sequence, el("t^2")) is None


def test_b11_sequences(el):
    # When
    down = b11_seq(el("t^2"), 1, Direction.DOWN)
    up = b11_seq(el("t^2"), 1, Direction.UP)

    # Then
    assert down.terms == [el("t")]
    assert up.terms == [el("t^3")]
    assert down.level == EquivLevel.E3


def test_b11_term_certification(el):
    # Then
    assert b11_predicate(el("t^2"), el("t"), 1, Direction.DOWN)
    assert certify_b11_term(el("t^2"), el("t"), 1, Direction.DOWN)
    assert not certify_b11_term(el("t^2"), el("t - 1"), 1, Direction.DOWN)


def test_b11_without_rational_root(el):
    with pytest.raises(CoefficientNotRepresentable):
        b11_seq(el("2*t^2"), 1, Direction.DOWN)


def test_sequences_reject_standard_input(el):
    with pytest.raises(StandardInput):
        e0_seq(el("5"), 3, Direction.UP)
    with pytest.raises(InvariantViolation):
        e2_seq(el("t"), -1, Direction.UP)
