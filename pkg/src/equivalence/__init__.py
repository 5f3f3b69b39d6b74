"""equivalence 패키지

E0..E4 닫힌 형식 판정(deciders), 정의 그대로의 검사(oracle).
E5 증명기(prover)는 automorph에 의존하므로 여기서 다시 내보내지 않습니다.
"""

from src.equivalence.deciders import companion_witness, decide, holds, minimal_bound_n
from src.equivalence.entities import BoundN, Companion, Exhausted, Reason, Verdict, Witness
from src.equivalence.enums import EquivLevel
from src.equivalence.oracle import (
    SearchBounds,
    check_refutation,
    check_witness,
    companion_pool,
    default_bounds,
    search,
)

__all__ = [
    "BoundN",
    "Companion",
    "EquivLevel",
    "Exhausted",
    "Reason",
    "SearchBounds",
    "Verdict",
    "Witness",
    "check_refutation",
    "check_witness",
    "companion_pool",
    "companion_witness",
    "decide",
    "default_bounds",
    "holds",
    "minimal_bound_n",
    "search",
]
