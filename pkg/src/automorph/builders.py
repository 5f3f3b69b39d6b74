"""E2 / E3 쌍에서 순서 자기동형사상 만들기

- build_from_e2: 클래스 단위 아핀 사상, c는 (b - a)를 (n - 1)로 나눠서 구함
- build_from_e3: E3Shift로 a2 = c*a1 꼴로 정규화한 뒤 build_from_e2와 합성
- extend_initial_segment / e5_closure_under_sum: 구간을 이어 붙인 사상
"""

import math
from time import time
from typing import Optional

from src.automorph.entities.descriptor import (
    Compose,
    Descriptor,
    E0ClassShift,
    E2Affine,
    E3Shift,
    Identity,
    Inverse,
    SegmentExtension,
)
from src.automorph.evaluation import apply
from src.core.exceptions import NotE2Equivalent, NotE3Equivalent
from src.equivalence.deciders import holds, require_nonstandard
from src.equivalence.enums import EquivLevel
from src.series import (
    Element,
    ModelConfig,
    Ordering,
    cmp,
    divmod_scalar,
    mul,
    scalar_mul,
    sub,
)
from src.shared.logger import get_logger

logger = get_logger(__name__)


def _exact_multiple(a: Element, b: Element) -> Optional[int]:
    """b = m*a 인 표준 m (m >= 2), 아니면 None"""
    ratio = b.leading.coeff / a.leading.coeff
    if ratio.denominator != 1 or ratio < 2:
        return None
    m = int(ratio)
    return m if scalar_mul(a, m) == b else None


def _least_multiple_above(a: Element, b: Element) -> int:
    """b < n*a 인 최소 n (n >= 2)"""
    n = max(2, math.floor(b.leading.coeff / a.leading.coeff))
    while cmp(b, scalar_mul(a, n)) != Ordering.LESS:
        n += 1
    return n


def build_from_e2(
    a: Element, b: Element, config: Optional[ModelConfig] = None
) -> Descriptor:
    """a를 b로 보내는 순서 자기동형사상 (a E2 b)

    a < b 이고 같은 E0-클래스가 아니면, b < n*a 인 최소 n과
    (b - a) = (n - 1)*q + m 으로 c = a - q 를 잡습니다.
    c 이하의 E0-클래스는 고정되고 위의 클래스는 n배로 늘어납니다.
    """
    require_nonstandard(a, b)
    if not holds(EquivLevel.E2, a, b):
        raise NotE2Equivalent(
            f"{a} and {b} are not E2-equivalent",
            deg_a=str(a.degree()),
            deg_b=str(b.degree()),
        )
    if a == b:
        return Identity()
    if cmp(a, b) == Ordering.GREATER:
        return Inverse(inner=build_from_e2(b, a, config))
    if holds(EquivLevel.E0, a, b):
        return E0ClassShift(anchor=a, offset=int(b.constant_term() - a.constant_term()))

    multiple = _exact_multiple(a, b)
    if multiple is not None:
        # b = m*a 경계: b - 1 로 보낸 뒤 클래스 안에서 한 칸 이동
        below = sub(b, Element.constant(1, b.dim))
        return Compose(
            parts=(E0ClassShift(anchor=below, offset=1), build_from_e2(a, below, config)),
            pinned=((a, b),),
        )

    start_time = time()
    n = _least_multiple_above(a, b)
    quotient, m = divmod_scalar(sub(b, a), n - 1)
    c = sub(a, quotient)
    descriptor = E2Affine(a=a, b=b, n=n, c=c, m=m, path="exact" if m == 0 else "k7")
    logger.debug(
        f"E2 사상 생성: n={n}, c={c}, m={m}, 소요 시간: {time() - start_time:.4f}초"
    )
    return descriptor


def build_from_e3(
    a1: Element, a2: Element, config: Optional[ModelConfig] = None
) -> Descriptor:
    """a1을 a2로 보내는 순서 자기동형사상 (a1 E3 a2)

    d=1 이거나 이미 E2이면 build_from_e2로 넘깁니다. 그 외에는
    c = t^(0, q2 - q1)로 a1을 c*a1(deg(a2)와 같은 차수)로 보낸 뒤
    E2 사상으로 a2까지 옮깁니다.
    """
    require_nonstandard(a1, a2)
    if not holds(EquivLevel.E3, a1, a2):
        raise NotE3Equivalent(
            f"{a1} and {a2} are not E3-equivalent",
            deg_a=str(a1.degree()),
            deg_b=str(a2.degree()),
        )
    if a1.dim == 1 or holds(EquivLevel.E2, a1, a2):
        return build_from_e2(a1, a2, config)
    if cmp(a1, a2) == Ordering.GREATER:
        return Inverse(inner=build_from_e3(a2, a1, config))

    start_time = time()
    spread = a2.degree().components[1] - a1.degree().components[1]
    c = Element.monomial(1, (0, spread))
    normalized = mul(c, a1)
    shift = E3Shift(a1=a1, a2=normalized, c=c)
    if normalized == a2:
        return shift
    descriptor = Compose(parts=(build_from_e2(normalized, a2, config), shift), pinned=((a1, a2),))
    logger.debug(f"E3 사상 생성: c={c}, 소요 시간: {time() - start_time:.4f}초")
    return descriptor


def extend_initial_segment(f_below: Descriptor, a: Element, b: Element) -> Descriptor:
    """M_{<a} -> M_{<b} 동형사상을 x >= a 에서 b + (x - a)로 확장"""
    return SegmentExtension(below=f_below, a=a, b=b)


def e5_closure_under_sum(f1: Descriptor, a1: Element, f2: Descriptor) -> Descriptor:
    """f1(a1) = b1, f2(a2) = b2 이면 결과 g는 g(a1 + a2) = b1 + b2"""
    return SegmentExtension(below=f1, a=a1, b=apply(f1, a1), above=f2)
