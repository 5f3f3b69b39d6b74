from typing import Literal, Optional, Union

from pydantic import Field

from src.cli.schemas.element_schema import JsonModel, ElementSchema
from src.equivalence.entities import BoundN, Companion, Exhausted, Verdict


class BoundNSchema(JsonModel):
    kind: Literal["bound_n"] = "bound_n"
    n: int


class CompanionSchema(JsonModel):
    kind: Literal["companion"] = "companion"
    c: ElementSchema
    text: str = Field(..., description="c의 표준 표기")


class ExhaustedSchema(JsonModel):
    kind: Literal["exhausted"] = "exhausted"
    n_max: int
    pool_size: int


WitnessSchema = Union[BoundNSchema, CompanionSchema]


def witness_schema(witness) -> Optional[Union[BoundNSchema, CompanionSchema, ExhaustedSchema]]:
    if witness is None:
        return None
    if isinstance(witness, BoundN):
        return BoundNSchema(n=witness.n)
    if isinstance(witness, Companion):
        return CompanionSchema(c=ElementSchema.from_element(witness.c), text=str(witness.c))
    if isinstance(witness, Exhausted):
        return ExhaustedSchema(n_max=witness.n_max, pool_size=witness.pool_size)
    raise TypeError(f"unknown witness type: {type(witness).__name__}")


class ReasonSchema(JsonModel):
    rule: str
    deg_a: Optional[str] = None
    deg_b: Optional[str] = None
    deg_diff: Optional[str] = None
    detail: str = ""


class VerdictSchema(JsonModel):
    """{level, equivalent, witness, reason}"""

    level: int
    equivalent: bool
    witness: Optional[WitnessSchema] = None
    reason: ReasonSchema

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "VerdictSchema":
        return cls(
            level=int(verdict.level),
            equivalent=verdict.equivalent,
            witness=witness_schema(verdict.witness),
            reason=ReasonSchema(**verdict.reason.model_dump()),
        )
