"""인접한 두 동치 단계를 가르는 고정 예시

각 쌍은 위 단계에서 증인으로 양성이 확인되고, 아래 단계에서는
부정 판정과 한계 탐색 실패가 함께 확인됩니다.
"""

from typing import List, Optional, Tuple

from src.cli.grammar import format_element, parse_element
from src.cli.sampler import ElementSampler
from src.cli.suites.case import CaseRecorder
from src.equivalence import (
    BoundN,
    EquivLevel,
    Witness,
    check_refutation,
    check_witness,
    decide,
    default_bounds,
)
from src.series import ModelConfig

# (아래 단계, a, b)
_EXHIBITS = {
    1: [
        (EquivLevel.E0, "t^2 + t", "t^2"),
        (EquivLevel.E1, "t^2", "2*t^2"),
    ],
    2: [
        (EquivLevel.E0, "t^(2,0) + t^(1,0)", "t^(2,0)"),
        (EquivLevel.E1, "t^(2,0)", "2*t^(2,0)"),
        (EquivLevel.E2, "t^(1,0)", "t^(1,1)"),
        (EquivLevel.E3, "t^(1,0)", "t^(2,0)"),
    ],
}

_REFUTE_N_MAX = 64


def exhibits(dim: int) -> List[Tuple[EquivLevel, str, str]]:
    return _EXHIBITS[dim]


def _witness_text(witness: Optional[Witness]) -> str:
    if witness is None:
        return "-"
    if isinstance(witness, BoundN):
        return f"n={witness.n}"
    return f"c={format_element(witness.c)}"


def separation_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    if rec.index != 0:
        return
    for lower, a_text, b_text in exhibits(sampler.dim):
        upper = EquivLevel(lower + 1)
        with rec.guard(f"separation E{int(lower)}/E{int(upper)} ({a_text}, {b_text})"):
            a, b = parse_element(a_text, sampler.dim), parse_element(b_text, sampler.dim)
            positive = decide(upper, a, b, config)
            rec.expect(
                positive.equivalent and check_witness(upper, a, b, positive.witness),
                f"E{int(upper)} not certified for ({a_text}, {b_text})",
            )
            negative = decide(lower, a, b, config)
            rec.expect(
                check_refutation(lower, a, b, negative, default_bounds(a, b, _REFUTE_N_MAX)),
                f"E{int(lower)} not refuted for ({a_text}, {b_text})",
            )
            rec.exhibit(
                pair=f"({a_text}, {b_text})",
                separates=f"E{int(lower)} < E{int(upper)}",
                witness=_witness_text(positive.witness),
            )
