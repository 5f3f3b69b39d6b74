"""클래스 경계 수열

- e0_seq: a +- n, a의 E0-클래스 안에서 공시작/공종
- e1_seq: a + floor(a/2^n), a - ceil(a/2^n), a의 E1-클래스 밖에서 경계로 수렴
- e2_seq: n*a, ceil(a/n), a의 E2-클래스 안에서 공시작/공종
- b11_seq: floor(a^(1 +- 2^-n)), a의 E3-클래스 밖에서 경계로 수렴

모든 수열은 반환 전에 단조성과 클래스 소속을 정확히 검사합니다.
"""

from typing import Callable, List, Optional, Tuple

from src.analysis.entities import ClassSequence
from src.analysis.enums import Direction
from src.core.exceptions import InvariantViolation, StandardInput
from src.equivalence.deciders import holds, minimal_bound_n
from src.equivalence.enums import EquivLevel
from src.series import (
    Element,
    ModelConfig,
    Ordering,
    Series,
    add,
    ceil_div_scalar,
    cmp,
    divmod_scalar,
    pow,
    root_floor,
    scalar_mul,
    sub,
)


def _require(a: Element, k: int) -> None:
    if a.is_standard():
        raise StandardInput(f"{a} is standard; class sequences need a nonstandard element")
    if k < 0:
        raise InvariantViolation(f"sequence length must be nonnegative, got {k}")


def _finish(sequence: ClassSequence, a: Element, inside: bool) -> ClassSequence:
    if not sequence.is_monotone():
        raise InvariantViolation(f"{sequence.level.name} sequence of {a} is not monotone")
    for term in sequence.terms:
        if term.is_standard() or holds(sequence.level, a, term) != inside:
            where = "inside" if inside else "outside"
            raise InvariantViolation(f"term {term} is not {where} the class of {a}")
    return sequence


def e0_seq(a: Element, k: int, direction: Direction) -> ClassSequence:
    """a + n (up) 또는 a - n (down), n = 0..k-1"""
    _require(a, k)
    direction = Direction(direction)
    sign = 1 if direction == Direction.UP else -1
    terms = [Element.of(a.to_series() + Series.constant(sign * n, a.dim)) for n in range(k)]
    sequence = ClassSequence(
        direction=direction,
        level=EquivLevel.E0,
        monotone="increasing" if direction == Direction.UP else "decreasing",
        first_n=0,
        terms=terms,
    )
    return _finish(sequence, a, inside=True)


def e2_seq(a: Element, k: int, direction: Direction) -> ClassSequence:
    """n*a (up) 또는 min{b : n*b >= a} (down), n = 1..k"""
    _require(a, k)
    direction = Direction(direction)
    if direction == Direction.UP:
        terms = [scalar_mul(a, n) for n in range(1, k + 1)]
    else:
        terms = [ceil_div_scalar(a, n) for n in range(1, k + 1)]
    sequence = ClassSequence(
        direction=direction,
        level=EquivLevel.E2,
        monotone="increasing" if direction == Direction.UP else "decreasing",
        first_n=1,
        terms=terms,
    )
    return _finish(sequence, a, inside=True)


def e1_seq(a: Element, k: int, direction: Direction) -> ClassSequence:
    """a + floor(a/2^n) (up, 감소) 또는 a - ceil(a/2^n) (down, 증가), n = 1..k"""
    _require(a, k)
    direction = Direction(direction)
    if direction == Direction.UP:
        terms = [add(a, divmod_scalar(a, 2**n)[0]) for n in range(1, k + 1)]
    else:
        terms = [sub(a, ceil_div_scalar(a, 2**n)) for n in range(1, k + 1)]
    sequence = ClassSequence(
        direction=direction,
        level=EquivLevel.E1,
        monotone="decreasing" if direction == Direction.UP else "increasing",
        first_n=1,
        terms=terms,
    )
    return _finish(sequence, a, inside=False)


def _b11_power(n: int, direction: Direction) -> Tuple[int, int]:
    """(K, a의 지수) = (2^n, 2^n +- 1)"""
    root = 2**n
    return root, root + 1 if direction == Direction.UP else root - 1


def b11_predicate(a: Element, b: Element, n: int, direction: Direction) -> bool:
    """b^(2^n) <= a^(2^n +- 1), 즉 b <= a^(1 +- 2^-n)"""
    root, power = _b11_power(n, Direction(direction))
    return cmp(pow(b, root), pow(a, power)) != Ordering.GREATER


def certify_b11_term(a: Element, b: Element, n: int, direction: Direction) -> bool:
    """b가 술어를 만족하는 최대 원소인지: b는 만족, b+1은 불만족"""
    following = add(b, Element.constant(1, b.dim))
    return b11_predicate(a, b, n, direction) and not b11_predicate(a, following, n, direction)


def b11_seq(
    a: Element, k: int, direction: Direction, config: Optional[ModelConfig] = None
) -> ClassSequence:
    """floor(a^(1 + 2^-n)) (up, 감소) 또는 floor(a^(1 - 2^-n)) (down, 증가), n = 1..k

    각 항은 root_floor(a^(2^n +- 1), 2^n)으로 구하고 최대성 술어로 다시
    확인합니다. 유리 계수 근이 없으면 CoefficientNotRepresentable이 그대로 올라갑니다.
    """
    _require(a, k)
    direction = Direction(direction)
    terms: List[Element] = []
    for n in range(1, k + 1):
        root, power = _b11_power(n, direction)
        term = root_floor(pow(a, power), root, config)
        if not certify_b11_term(a, term, n, direction):
            raise InvariantViolation(f"b11 term {term} for n={n} fails its maximality check")
        terms.append(term)
    sequence = ClassSequence(
        direction=direction,
        level=EquivLevel.E3,
        monotone="decreasing" if direction == Direction.UP else "increasing",
        first_n=1,
        terms=terms,
    )
    return _finish(sequence, a, inside=False)


def passing_n(sequence: ClassSequence, b: Element) -> Optional[int]:
    """sequence가 b를 처음 넘는 항의 n (up은 > b, down은 < b)"""
    beyond = Ordering.GREATER if sequence.direction == Direction.UP else Ordering.LESS
    for index, term in enumerate(sequence.terms):
        if cmp(term, b) == beyond:
            return sequence.first_n + index
    return None


_BUILDERS: dict = {EquivLevel.E0: e0_seq, EquivLevel.E2: e2_seq}


def cofinality_bound(level: EquivLevel, a: Element, b: Element, direction: Direction) -> int:
    """b의 증인 n에서 계산한, 수열이 b를 넘는 n의 상한

    E0: a +- n 은 n에서 b를 넘습니다.
    E2: n*a 는 n에서, ceil(a/n)은 늦어도 n+1에서 b를 넘습니다.
    """
    level = EquivLevel(level)
    n = minimal_bound_n(level, a, b)
    if level == EquivLevel.E2 and Direction(direction) == Direction.DOWN:
        return n + 1
    return n


def check_cofinality(
    level: EquivLevel, a: Element, b: Element, direction: Direction
) -> Tuple[int, int]:
    """(실제로 넘는 n, 증인에서 계산한 상한). 상한 안에서 넘지 못하면 오류"""
    level = EquivLevel(level)
    if level not in _BUILDERS:
        raise InvariantViolation(f"cofinal sequences exist for E0 and E2, not E{int(level)}")
    bound = cofinality_bound(level, a, b, direction)
    builder: Callable[..., ClassSequence] = _BUILDERS[level]
    sequence = builder(a, bound + 1, direction)
    found = passing_n(sequence, b)
    if found is None or found > bound:
        raise InvariantViolation(f"sequence of {a} does not pass {b} by n={bound}")
    return found, bound
