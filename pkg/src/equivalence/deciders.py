"""E0..E4 닫힌 형식 판정

모델의 차수(degree)만 비교해서 판정하고, 양성 판정에는 증인을 합성한 뒤
oracle.check_witness로 다시 검사합니다. 검사에 실패한 증인은
search_n_max 번까지 +1씩 올려 봅니다.
"""

import math
from fractions import Fraction
from typing import Optional

from src.core.exceptions import (
    DimensionMismatch,
    InvariantViolation,
    NotE2Equivalent,
    NotE3Equivalent,
    NotE4Equivalent,
    NotEquivalent,
    StandardInput,
)
from src.equivalence.entities.verdict import BoundN, Companion, Reason, Verdict
from src.equivalence.enums import EquivLevel
from src.equivalence.oracle import check_witness
from src.series import Element, Exponent, ModelConfig, add
from src.series.arithmetic import difference

_NOT_EQUIVALENT = {
    EquivLevel.E2: NotE2Equivalent,
    EquivLevel.E3: NotE3Equivalent,
    EquivLevel.E4: NotE4Equivalent,
}


def _config(config: Optional[ModelConfig], dim: int) -> ModelConfig:
    return config if config is not None else ModelConfig.from_settings(dim=dim)


def require_nonstandard(a: Element, b: Element) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} != {b.dim}")
    for x in (a, b):
        if x.is_standard():
            raise StandardInput(f"{x} is standard; relations are defined on nonstandard elements")


def _diff_degree(a: Element, b: Element) -> Optional[Exponent]:
    return difference(a, b).degree()


def _first(exp: Exponent) -> Fraction:
    return exp.components[0]


def holds(level: EquivLevel, a: Element, b: Element) -> bool:
    """증인 없이 닫힌 형식만 평가 (입력은 비표준이라고 가정)"""
    level = EquivLevel(level)
    deg_a, deg_b = a.degree(), b.degree()

    if level == EquivLevel.E0:
        return a.positive_part() == b.positive_part()
    if level == EquivLevel.E1:
        gap = _diff_degree(a, b)
        return gap is None or gap < deg_a
    if level == EquivLevel.E2:
        return deg_a == deg_b
    if level == EquivLevel.E3:
        if a.dim == 1:
            return deg_a == deg_b
        if _first(deg_a) > 0 and _first(deg_b) > 0:
            return _first(deg_a) == _first(deg_b)
        return deg_a == deg_b
    return deg_a.same_archimedean_class(deg_b)


def _reason(level: EquivLevel, a: Element, b: Element, equivalent: bool) -> Reason:
    gap = _diff_degree(a, b)
    rules = {
        EquivLevel.E0: ("positive_parts_equal", "양의 지수 부분 비교"),
        EquivLevel.E1: ("difference_degree_below_degree", "deg(|a-b|) < deg(a) 비교"),
        EquivLevel.E2: ("degree_equality", "deg(a) = deg(b) 비교"),
        EquivLevel.E3: (
            "first_component_equality" if a.dim == 2 else "degree_equality",
            "양수인 첫 성분 비교, 첫 성분이 0이면 차수 전체 비교"
            if a.dim == 2
            else "d=1에서는 E2와 같음",
        ),
        EquivLevel.E4: ("archimedean_class", "차수의 아르키메데스 클래스 비교"),
    }
    rule, detail = rules[level]
    verdict = "holds" if equivalent else "fails"
    return Reason(
        rule=rule,
        deg_a=str(a.degree()),
        deg_b=str(b.degree()),
        deg_diff=str(gap) if gap is not None else None,
        detail=f"{detail}: {verdict}",
    )


def _refuse(level: EquivLevel, a: Element, b: Element) -> NotEquivalent:
    error = _NOT_EQUIVALENT.get(level, NotEquivalent)
    return error(
        f"{a} and {b} are not E{int(level)}-equivalent",
        level=int(level),
        deg_a=str(a.degree()),
        deg_b=str(b.degree()),
    )


def _ratio_start(x: Fraction, y: Fraction) -> int:
    """n < max(x/y, y/x) 이면 증인이 될 수 없으므로 그 바닥값부터 시작"""
    ratio = max(x / y, y / x)
    return max(2, math.floor(ratio))


def minimal_bound_n(
    level: EquivLevel, a: Element, b: Element, config: Optional[ModelConfig] = None
) -> int:
    """단계 0, 2, 4의 최소 표준 증인 n (n은 통과, n-1은 실패)"""
    level = EquivLevel(level)
    if not level.uses_bound:
        raise InvariantViolation(f"level {int(level)} uses a companion witness, not a bound")
    require_nonstandard(a, b)
    if not holds(level, a, b):
        raise _refuse(level, a, b)
    cfg = _config(config, a.dim)

    if level == EquivLevel.E0:
        start = abs(int(a.constant_term()) - int(b.constant_term())) + 1
    elif level == EquivLevel.E2:
        start = _ratio_start(a.leading.coeff, b.leading.coeff)
    else:
        deg_a, deg_b = a.degree(), b.degree()
        index = deg_a.archimedean_index()
        start = _ratio_start(deg_a.components[index], deg_b.components[index])

    for n in range(start, start + cfg.search_n_max + 1):
        if check_witness(level, a, b, BoundN(n=n)):
            return n
    raise InvariantViolation(
        f"no E{int(level)} bound found for {a}, {b} within {cfg.search_n_max} escalations"
    )


def _companion_start(level: EquivLevel, a: Element, b: Element, config: ModelConfig):
    """(초기 후보, 다음 후보를 만드는 함수)"""
    dim = a.dim
    if level == EquivLevel.E1:
        gap = _diff_degree(a, b)
        low = gap if gap is not None and gap.is_positive() else Exponent.zero(dim)
        exp = (low + a.degree()).scale(Fraction(1, 2))
        one = Element.constant(1, dim)
        return add(Element.monomial(1, exp.components), one), lambda c: add(c, one)

    deg_a, deg_b = a.degree(), b.degree()
    if deg_a == deg_b:
        n = minimal_bound_n(EquivLevel.E2, a, b, config)
        return Element.constant(n, dim), lambda c: add(c, Element.constant(1, dim))

    spread = abs(deg_a.components[1] - deg_b.components[1]) + 1

    def widen(c: Element) -> Element:
        return Element.monomial(1, (0, c.degree().components[1] + 1))

    return Element.monomial(1, (0, spread)), widen


def companion_witness(
    level: EquivLevel, a: Element, b: Element, config: Optional[ModelConfig] = None
) -> Element:
    """단계 1, 3의 동반 원소 c"""
    level = EquivLevel(level)
    if level.uses_bound:
        raise InvariantViolation(f"level {int(level)} uses a bound witness, not a companion")
    require_nonstandard(a, b)
    if not holds(level, a, b):
        raise _refuse(level, a, b)
    cfg = _config(config, a.dim)

    candidate, escalate = _companion_start(level, a, b, cfg)
    for _ in range(cfg.search_n_max + 1):
        if check_witness(level, a, b, Companion(c=candidate)):
            return candidate
        candidate = escalate(candidate)
    raise InvariantViolation(
        f"no E{int(level)} companion found for {a}, {b} within {cfg.search_n_max} escalations"
    )


def decide(
    level: EquivLevel, a: Element, b: Element, config: Optional[ModelConfig] = None
) -> Verdict:
    """E^level 판정. 양성이면 검증된 증인을 포함합니다."""
    level = EquivLevel(level)
    require_nonstandard(a, b)
    equivalent = holds(level, a, b)
    witness = None
    if equivalent:
        if level.uses_bound:
            witness = BoundN(n=minimal_bound_n(level, a, b, config))
        else:
            witness = Companion(c=companion_witness(level, a, b, config))
    return Verdict(
        level=level,
        equivalent=equivalent,
        witness=witness,
        reason=_reason(level, a, b, equivalent),
    )
