"""동치 판정 성질: 세분화, 동치 법칙, 볼록성, 합/곱 닫힘, 판정기와 정의 검사의 일치, 증인 집합"""

from itertools import combinations
from typing import List

from src.cli.sampler import ElementSampler
from src.cli.suites.case import CaseRecorder
from src.equivalence import (
    BoundN,
    EquivLevel,
    Exhausted,
    check_refutation,
    check_witness,
    decide,
    default_bounds,
    holds,
    search,
)
from src.equivalence.oracle import multiples_below, powers_below
from src.series import Element, ModelConfig, add, mul

# 부정 판정 재확인 시 탐색 한계
_REFUTE_N_MAX = 16


def refinement_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a = sampler.nonstandard()
    b = sampler.related(a)
    with rec.guard(f"refinement({a}, {b})"):
        verdicts = [decide(level, a, b, config).equivalent for level in EquivLevel]
        broken = [lo for lo in range(4) if verdicts[lo] and not verdicts[lo + 1]]
        rec.expect(
            not broken,
            f"refinement chain broken at E{broken[0] if broken else 0}: {a}, {b} ({verdicts})",
        )


def equivalence_laws_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    """각 단계의 판정이 동치 관계인지 확인"""
    a = sampler.nonstandard()
    b = sampler.related(a)
    c = sampler.related(b)
    with rec.guard(f"equivalence_laws({a}, {b}, {c})"):
        for level in EquivLevel:
            rec.expect(decide(level, a, a, config).equivalent, f"E{int(level)} not reflexive: {a}")
            ab = decide(level, a, b, config).equivalent
            rec.expect(
                ab == decide(level, b, a, config).equivalent,
                f"E{int(level)} not symmetric: {a}, {b}",
            )
            if ab and decide(level, b, c, config).equivalent:
                rec.expect(
                    decide(level, a, c, config).equivalent,
                    f"E{int(level)} not transitive: {a}, {b}, {c}",
                )


def convexity_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    x = sampler.nonstandard()
    low, mid, high = sorted([x, sampler.related(x), sampler.related(x)])
    if low == mid or mid == high:
        return
    with rec.guard(f"convexity({low}, {mid}, {high})"):
        for level in EquivLevel:
            if decide(level, low, high, config).equivalent:
                rec.expect(
                    decide(level, low, mid, config).equivalent
                    and decide(level, mid, high, config).equivalent,
                    f"E{int(level)} not convex: {low} < {mid} < {high}",
                )


def closure_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a1 = sampler.nonstandard()
    a2 = sampler.nonstandard()
    b1, b2 = sampler.related(a1), sampler.related(a2)
    with rec.guard(f"closure({a1}, {b1}; {a2}, {b2})"):
        for level in EquivLevel:
            if not (holds(level, a1, b1) and holds(level, a2, b2)):
                continue
            rec.expect(
                decide(level, add(a1, a2), add(b1, b2), config).equivalent,
                f"E{int(level)} not closed under +: ({a1}, {b1}), ({a2}, {b2})",
            )
            if level >= EquivLevel.E2:
                rec.expect(
                    decide(level, mul(a1, a2), mul(b1, b2), config).equivalent,
                    f"E{int(level)} not closed under *: ({a1}, {b1}), ({a2}, {b2})",
                )


def agreement_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a = sampler.nonstandard()
    b = sampler.related(a)
    with rec.guard(f"agreement({a}, {b})"):
        for level in EquivLevel:
            verdict = decide(level, a, b, config)
            if verdict.equivalent:
                rec.expect(
                    check_witness(level, a, b, verdict.witness),
                    f"E{int(level)} witness {verdict.witness} rejected for {a}, {b}",
                )
                bounds = default_bounds(a, b, _REFUTE_N_MAX, verdict.witness)
                rec.expect(
                    not isinstance(search(level, a, b, bounds), Exhausted),
                    f"E{int(level)} search misses a known witness for {a}, {b}",
                )
                if isinstance(verdict.witness, BoundN) and verdict.witness.n > 1:
                    rec.expect(
                        not check_witness(level, a, b, BoundN(n=verdict.witness.n - 1)),
                        f"E{int(level)} bound {verdict.witness.n} is not minimal for {a}, {b}",
                    )
            else:
                bounds = default_bounds(a, b, _REFUTE_N_MAX)
                rec.expect(
                    check_refutation(level, a, b, verdict, bounds),
                    f"E{int(level)} refutation not confirmed for {a}, {b}",
                )


def _candidates(sampler: ElementSampler, count: int) -> List[Element]:
    return [sampler.element() for _ in range(count)]


def witness_sets_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    """E1/E3 동치인 두 원소는 같은 증인 집합을 가지며, 그 집합은 합(E3은 곱도)에 닫힘"""
    a = sampler.nonstandard()
    b1 = Element.of(a.to_series() + sampler.lower_terms(a.degree()))
    b3 = sampler.e3_mate(a)
    cs = _candidates(sampler, 4)

    if holds(EquivLevel.E1, a, b1):
        for c in cs:
            rec.expect(
                multiples_below(c, a) == multiples_below(c, b1),
                f"E1 witness sets differ at {c}: {a}, {b1}",
            )
        admissible = [c for c in cs if multiples_below(c, a)]
        for c1, c2 in combinations(admissible, 2):
            rec.expect(
                multiples_below(add(c1, c2), a), f"E1 witness set not closed under +: {c1}, {c2}"
            )

    if holds(EquivLevel.E3, a, b3):
        for c in cs:
            rec.expect(
                powers_below(c, a) == powers_below(c, b3),
                f"E3 witness sets differ at {c}: {a}, {b3}",
            )
        admissible = [c for c in cs if powers_below(c, a)]
        for c1, c2 in combinations(admissible, 2):
            rec.expect(
                powers_below(add(c1, c2), a) and powers_below(mul(c1, c2), a),
                f"E3 witness set not closed: {c1}, {c2}",
            )
