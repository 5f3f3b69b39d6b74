"""구성된 자기동형사상: 앵커 적중, probe 검증, 합 닫힘"""

from typing import List, Set

from src.automorph import (
    almost_add_report,
    anchor_probes,
    apply,
    build_from_e2,
    build_from_e3,
    e5_closure_under_sum,
    validate,
)
from src.cli.sampler import ElementSampler
from src.cli.suites.case import CaseRecorder
from src.series import Element, ModelConfig, add


def _probes(sampler: ElementSampler, anchors: List[Element], count: int) -> List[Element]:
    """앵커 주변 probe에 서로 다른 임의 원소 count개를 섞습니다 (시도는 3 * count회까지)"""
    extra: Set[Element] = set()
    for _ in range(3 * count):
        if len(extra) >= count:
            break
        extra.add(sampler.element())
    return sorted(set(anchor_probes(anchors)) | extra)


def automorph_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a = sampler.nonstandard()
    b = sampler.e2_mate(a)
    with rec.guard(f"build_from_e2({a}, {b})"):
        f = build_from_e2(a, b, config)
        rec.expect(apply(f, a) == b, f"E2 automorphism misses its anchor: {a} -> {b}")
        report = validate(f, _probes(sampler, [a, b], config.validation_probes))
        rec.expect(report.passed, f"E2 automorphism failed validation: {a} -> {b}")
        rec.expect(
            almost_add_report(f, [a, b]).pairs == 3, f"almost-add report incomplete: {a}, {b}"
        )

    if sampler.dim == 2:
        a3 = sampler.nonstandard(leading=True)
        b3 = sampler.e3_mate(a3)
        with rec.guard(f"build_from_e3({a3}, {b3})"):
            g = build_from_e3(a3, b3, config)
            rec.expect(apply(g, a3) == b3, f"E3 automorphism misses its anchor: {a3} -> {b3}")
            report = validate(g, _probes(sampler, [a3, b3], config.validation_probes))
            rec.expect(report.passed, f"E3 automorphism failed validation: {a3} -> {b3}")

    a2 = sampler.nonstandard()
    b2 = sampler.e2_mate(a2)
    with rec.guard(f"e5_closure_under_sum({a}, {a2})"):
        f1 = build_from_e2(a, b, config)
        f2 = build_from_e2(a2, b2, config)
        g = e5_closure_under_sum(f1, a, f2)
        total, image = add(a, a2), add(b, b2)
        rec.expect(apply(g, total) == image, f"sum closure misses {total} -> {image}")
        report = validate(g, _probes(sampler, [a, total, image], config.validation_probes))
        rec.expect(report.passed, f"sum-closure map failed validation: {total} -> {image}")
