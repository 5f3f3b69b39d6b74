"""E5 증명기 (건전하지만 완전하지 않음)

E2이면 build_from_e2, E3이면 build_from_e3 경로로 a를 b로 보내는
자기동형사상을 만들고 앵커 주변 probe로 검증합니다.
두 경로가 모두 없으면 CannotProve를 올리며, E5가 아니라는 뜻은 아닙니다.
"""

from typing import Optional

from src.automorph import Descriptor, anchor_probes, build_from_e2, build_from_e3, validate
from src.core.exceptions import CannotProve
from src.equivalence.deciders import holds, require_nonstandard
from src.equivalence.enums import EquivLevel
from src.series import Element, ModelConfig


def prove_E5(a: Element, b: Element, config: Optional[ModelConfig] = None) -> Descriptor:
    require_nonstandard(a, b)
    if holds(EquivLevel.E2, a, b):
        descriptor = build_from_e2(a, b, config)
    elif holds(EquivLevel.E3, a, b):
        descriptor = build_from_e3(a, b, config)
    else:
        raise CannotProve(
            f"no E2/E3 route from {a} to {b}",
            deg_a=str(a.degree()),
            deg_b=str(b.degree()),
        )
    validate(descriptor, anchor_probes([a, b]))
    return descriptor
