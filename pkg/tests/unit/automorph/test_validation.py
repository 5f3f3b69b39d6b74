"""probe 검증과 덧셈 결함 단위 테스트"""

import pytest

from src.automorph import (
    E0ClassShift,
    E2Affine,
    Identity,
    almost_add_defect,
    almost_add_report,
    anchor_probes,
    build_from_e2,
    validate,
)
from src.cli.sampler import ElementSampler, SampleProfile
from src.core.exceptions import InvariantViolation, ValidationFailure


def _seeded_probes(count: int):
    sampler = ElementSampler(SampleProfile(seed=11))
    return [sampler.element() for _ in range(count)]


def test_validate_e2_map_on_seeded_probes(el, d1):
    # Given
    a, b = el("t"), el("2*t + 1")
    f = build_from_e2(a, b, d1)
    probes = sorted(set(anchor_probes([a, b])) | set(_seeded_probes(100)))

    # When
    report = validate(f, probes)

    # Then
    assert report.passed
    assert report.probes == len(probes)
    assert {check.name for check in report.checks} >= {"monotonicity", "inverse", "e0_transport"}


def test_validate_identity(el):
    assert validate(Identity(), anchor_probes([el("t^2 + t")])).passed


def test_validate_catches_corrupted_descriptor(el):
    """앵커와 맞지 않는 기술자는 실패"""
    # Given
    corrupted = E2Affine(a=el("t"), b=el("5*t"), n=2, c=el("1"), m=0, path="exact")

    # When / Then
    with pytest.raises(ValidationFailure) as exc_info:
        validate(corrupted, anchor_probes([el("t"), el("5*t")]))
    assert exc_info.value.check == "anchor"


def test_validate_requires_sorted_probes(el):
    with pytest.raises(InvariantViolation):
        validate(Identity(), [el("t"), el("1")])


def test_almost_add_defect(el, d1):
    # Given
    shift = E0ClassShift(anchor=el("t"), offset=1)
    stretch = build_from_e2(el("t"), el("2*t + 1"), d1)

    # Then
    assert almost_add_defect(Identity(), el("t"), el("t^2")) == 0
    assert almost_add_defect(shift, el("t"), el("t")) == -2
    assert almost_add_defect(stretch, el("t"), el("t")) is None


def test_almost_add_report(el):
    # Given
    shift = E0ClassShift(anchor=el("t"), offset=1)

    # When
    report = almost_add_report(shift, [el("t"), el("t^2")])

    # Then
    assert report.pairs == 3
    assert report.almost_additive
    assert report.max_abs_defect == 2
