"""E0..E4의 정의 그대로의(brute-force) 의미론

닫힌 형식 판정기(deciders)를 교차 검증하고 증인을 검사합니다.
유한 부등식은 정확 연산으로 계산하고, "모든 표준 n에 대해" 형태의
전칭 조건은 차수 비교로 정확히 판정합니다 (n에 대한 샘플링은 하지 않음).
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Union

from pydantic import Field

from src.core.exceptions import DimensionMismatch
from src.equivalence.entities.verdict import BoundN, Companion, Exhausted, Verdict, Witness
from src.equivalence.enums import EquivLevel
from src.series import Element, Exponent, Ordering, add, cmp, mul, pow, scalar_mul
from src.series.arithmetic import difference
from src.shared.schema import BaseSchema


class SearchBounds(BaseSchema):
    """brute-force 탐색 한계"""

    n_max: int = Field(..., ge=2, description="시도할 표준 n의 상한")
    companion_pool: List[Element] = Field(default_factory=list, description="동반 원소 후보")


def _less(x: Element, y: Element) -> bool:
    return cmp(x, y) == Ordering.LESS


def below_power(x: Element, y: Element, n: int) -> bool:
    """x < y^n (정확). 차수가 다르면 차수로, 같으면 전개해서 비교"""
    deg_x, deg_y = x.degree(), y.degree()
    if deg_x is not None and deg_y is not None and not deg_y.is_zero():
        deg_pow = deg_y.scale(n)
        if deg_pow > deg_x:
            return True
        if deg_pow < deg_x:
            return False
    return _less(x, pow(y, n))


def multiples_below(c: Element, x: Element) -> bool:
    """모든 표준 n에 대해 n*c < x (x는 비표준)"""
    if c.is_zero():
        return True
    return c.degree() < x.degree()


def powers_below(c: Element, x: Element) -> bool:
    """모든 표준 n에 대해 c^n < x (x는 비표준)"""
    if c.is_standard():
        return True
    return c.degree().is_dominated_by(x.degree())


def check_witness(level: EquivLevel, a: Element, b: Element, w: Witness) -> bool:
    """정의의 조건을 그대로 검사. 잘못된 형태의 증인은 False"""
    level = EquivLevel(level)
    try:
        if isinstance(w, BoundN):
            if not level.uses_bound or w.n < 1:
                return False
            n = w.n
            if level == EquivLevel.E0:
                bound = Element.constant(n, a.dim)
                return _less(a, add(b, bound)) and _less(b, add(a, bound))
            if level == EquivLevel.E2:
                return _less(a, scalar_mul(b, n)) and _less(b, scalar_mul(a, n))
            return below_power(a, b, n) and below_power(b, a, n)

        if isinstance(w, Companion):
            if level.uses_bound:
                return False
            c = w.c
            if c.dim != a.dim:
                return False
            if level == EquivLevel.E1:
                universal = multiples_below(c, a) and multiples_below(c, b)
                return universal and _less(a, add(b, c)) and _less(b, add(a, c))
            universal = powers_below(c, a) and powers_below(c, b)
            return universal and _less(a, mul(b, c)) and _less(b, mul(a, c))
    except DimensionMismatch:
        return False
    return False


def companion_pool(a: Element, b: Element, extra: Iterable[Element] = ()) -> List[Element]:
    """입력의 차수 격자에서 만든 동반 원소 후보"""
    dim = a.dim
    zero = Exponent.zero(dim)
    base = [zero, a.degree(), b.degree()]
    gap = difference(a, b)
    if not gap.is_zero() and gap.degree().is_positive():
        base.append(gap.degree())

    exps = set()
    for x in base:
        for y in base:
            exps.add((x + y).scale(Fraction(1, 2)))
    if dim == 2:
        spread = abs(a.degree().components[1] - b.degree().components[1])
        for k in range(0, 5):
            exps.add(Exponent.of(0, spread + k))
            for x in base:
                exps.add(x + Exponent.of(0, k))

    one = Element.constant(1, dim)
    pool: List[Element] = [Element.constant(k, dim) for k in (1, 2, 3)]
    for exp in sorted((e for e in exps if e.is_positive()), reverse=True):
        monomial = Element.monomial(1, exp.components)
        pool.extend([monomial, add(monomial, one)])
    pool.extend(extra)

    unique: List[Element] = []
    seen = set()
    for candidate in pool:
        if candidate not in seen:
            seen.add(candidate)
            unique.append(candidate)
    return unique


def default_bounds(
    a: Element, b: Element, n_max: int, seed_witness: Optional[Witness] = None
) -> SearchBounds:
    """판정기가 준 증인 크기 + 1 로 한계를 정합니다"""
    extra: List[Element] = []
    if isinstance(seed_witness, BoundN):
        n_max = max(n_max, seed_witness.n + 1)
    elif isinstance(seed_witness, Companion):
        extra.append(seed_witness.c)
    return SearchBounds(n_max=max(n_max, 2), companion_pool=companion_pool(a, b, extra))


def search(
    level: EquivLevel, a: Element, b: Element, bounds: SearchBounds
) -> Union[Witness, Exhausted]:
    """한계 안에서 처음 찾은 증인, 없으면 Exhausted"""
    level = EquivLevel(level)
    if level.uses_bound:
        for n in range(1, bounds.n_max + 1):
            witness = BoundN(n=n)
            if check_witness(level, a, b, witness):
                return witness
    else:
        for c in bounds.companion_pool:
            witness = Companion(c=c)
            if check_witness(level, a, b, witness):
                return witness
    return Exhausted(n_max=bounds.n_max, pool_size=len(bounds.companion_pool))


def check_refutation(
    level: EquivLevel, a: Element, b: Element, verdict: Verdict, bounds: SearchBounds
) -> bool:
    """부정 판정의 근거(차수)를 다시 계산하고, 한계 안 탐색이 실패하는지 확인"""
    if verdict.equivalent:
        return False
    reason = verdict.reason
    if reason.deg_a != str(a.degree()) or reason.deg_b != str(b.degree()):
        return False
    return isinstance(search(level, a, b, bounds), Exhausted)
