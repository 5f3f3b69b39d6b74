from typing import Literal, Optional, Union

from pydantic import Field, model_validator

from src.equivalence.enums import EquivLevel
from src.series import Element
from src.shared.schema import BaseSchema


class BoundN(BaseSchema):
    """단계 0, 2, 4의 표준 n 증인"""

    kind: Literal["bound_n"] = "bound_n"
    n: int = Field(..., ge=1, description="유한 부등식을 만족시키는 표준 n")


class Companion(BaseSchema):
    """단계 1, 3의 동반 원소 c 증인"""

    kind: Literal["companion"] = "companion"
    c: Element = Field(..., description="동반 원소")


Witness = Union[BoundN, Companion]


class Exhausted(BaseSchema):
    """한계 안에서 증인을 찾지 못함 (비동치 증명이 아님)"""

    kind: Literal["exhausted"] = "exhausted"
    n_max: int = Field(..., description="시도한 n 상한")
    pool_size: int = Field(..., description="시도한 동반 원소 수")


class Reason(BaseSchema):
    """판정 근거: 사용한 차수 비교"""

    rule: str = Field(..., description="적용한 닫힌 형식 규칙")
    deg_a: Optional[str] = Field(None, description="deg(a)")
    deg_b: Optional[str] = Field(None, description="deg(b)")
    deg_diff: Optional[str] = Field(None, description="deg(|a-b|), 필요한 경우")
    detail: str = Field("", description="사람이 읽는 설명")


class Verdict(BaseSchema):
    level: EquivLevel
    equivalent: bool
    witness: Optional[Witness] = None
    reason: Reason

    @model_validator(mode="after")
    def _witness_for_positive(self) -> "Verdict":
        if self.equivalent and self.witness is None:
            raise ValueError("positive verdict requires a witness")
        return self
