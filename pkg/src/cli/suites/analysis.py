"""클래스 경계 수열, b11 근 수열, 실수 임베딩"""

from src.analysis import (
    Direction,
    b11_seq,
    certify_b11_term,
    check_cofinality,
    e0_seq,
    e1_seq,
    e2_seq,
    real_embed,
)
from src.cli.sampler import ElementSampler
from src.cli.suites.case import CaseRecorder
from src.equivalence import EquivLevel, holds
from src.series import Element, ModelConfig, Ordering, Series, cmp, mul

_SEQ_LENGTH = 4
_B11_LENGTH = 2


def sequences_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a = sampler.nonstandard()
    for direction in Direction:
        for builder in (e0_seq, e1_seq, e2_seq):
            with rec.guard(f"{builder.__name__}({a}, {direction.value})"):
                sequence = builder(a, _SEQ_LENGTH, direction)
                rec.expect(sequence.is_monotone(), f"{builder.__name__} not monotone for {a}")

    mates = {
        EquivLevel.E0: Element.of(
            a.positive_part().to_series() + Series.constant(sampler.small_int(0, 20), a.dim)
        ),
        EquivLevel.E2: sampler.e2_mate(a),
    }
    for level, b in mates.items():
        for direction in Direction:
            with rec.guard(f"cofinality E{int(level)} ({a}, {b}, {direction.value})"):
                found, bound = check_cofinality(level, a, b, direction)
                rec.expect(found <= bound, f"E{int(level)} sequence passes {b} late")


def _unit_lead(sampler: ElementSampler) -> Element:
    """선행 계수 1인 비표준 원소"""
    exp = sampler.exponent()
    series = (
        Series.monomial(1, exp)
        + sampler.lower_terms(exp)
        + Series.constant(sampler.small_int(0, 5), sampler.dim)
    )
    return Element.of(series)


def b11_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a = _unit_lead(sampler)
    for direction in Direction:
        with rec.guard(f"b11_seq({a}, {direction.value})"):
            sequence = b11_seq(a, _B11_LENGTH, direction, config)
            rec.expect(sequence.is_monotone(), f"b11 sequence not monotone for {a}")
            for n, term in enumerate(sequence.terms, start=sequence.first_n):
                rec.expect(
                    certify_b11_term(a, term, n, direction),
                    f"b11 term {term} (n={n}) is not the maximal solution for {a}",
                )


def embed_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    if sampler.dim != 2:
        return
    anchor = Element.monomial(1, (1, 0))
    b1, b2 = sampler.nonstandard(leading=True), sampler.nonstandard(leading=True)
    with rec.guard(f"real_embed({b1}, {b2})"):
        e1, e2 = real_embed(anchor, b1), real_embed(anchor, b2)
        rec.expect(not e1.degenerate and not e2.degenerate, f"degenerate embedding: {b1}, {b2}")

        mate = sampler.e3_mate(b1)
        rec.expect(
            real_embed(anchor, mate).value == e1.value,
            f"embedding not constant on the E3-class of {b1}: {mate}",
        )
        if not holds(EquivLevel.E3, b1, b2):
            same_order = (cmp(b1, b2) == Ordering.LESS) == (e1.value < e2.value)
            rec.expect(same_order, f"embedding does not preserve order: {b1}, {b2}")
        product = real_embed(anchor, mul(b1, b2))
        rec.expect(
            product.value == e1.value + e2.value,
            f"embedding not additive over products: {b1}, {b2}",
        )
