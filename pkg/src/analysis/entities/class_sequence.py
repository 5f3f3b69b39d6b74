from fractions import Fraction
from typing import List, Literal

from pydantic import Field

from src.analysis.enums import Direction
from src.equivalence.enums import EquivLevel
from src.series import Element, Ordering, cmp
from src.shared.schema import BaseSchema


class ClassSequence(BaseSchema):
    """클래스 경계를 향하는 유한 수열

    terms[i]는 매개변수 n = first_n + i 에 해당합니다.
    """

    direction: Direction
    level: EquivLevel
    monotone: Literal["increasing", "decreasing"]
    first_n: int = Field(..., description="첫 항의 n")
    terms: List[Element] = Field(default_factory=list)

    def is_monotone(self) -> bool:
        expected = Ordering.LESS if self.monotone == "increasing" else Ordering.GREATER
        return all(cmp(x, y) == expected for x, y in zip(self.terms, self.terms[1:]))


class EmbedResult(BaseSchema):
    """E3-클래스의 실수 임베딩 값"""

    value: Fraction = Field(..., description="deg(b)의 첫 성분 (퇴화 시 둘째 성분)")
    degenerate: bool = Field(False, description="첫 성분이 0인 퇴화 클래스")
