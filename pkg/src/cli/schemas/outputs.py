from typing import Dict, List, Literal, Optional

from pydantic import Field

from src.analysis import ClassSequence, EmbedResult
from src.automorph import AlmostAddReport, ValidationReport
from src.cli.schemas.descriptor_schema import DescriptorSchema
from src.cli.schemas.element_schema import ElementSchema, JsonModel, rational_text
from src.series import Series


class ElementOutput(JsonModel):
    element: ElementSchema
    text: str

    @classmethod
    def of(cls, element: Series) -> "ElementOutput":
        return cls(element=ElementSchema.from_element(element), text=str(element))


class CmpOutput(JsonModel):
    ordering: Literal["Less", "Equal", "Greater"]


class DivmodOutput(JsonModel):
    q: ElementOutput
    r: ElementOutput


class SequenceOutput(JsonModel):
    direction: str
    level: int
    monotone: str
    first_n: int
    terms: List[ElementOutput]

    @classmethod
    def of(cls, sequence: ClassSequence) -> "SequenceOutput":
        return cls(
            direction=sequence.direction.value,
            level=int(sequence.level),
            monotone=sequence.monotone,
            first_n=sequence.first_n,
            terms=[ElementOutput.of(term) for term in sequence.terms],
        )


class EmbedOutput(JsonModel):
    value: str = Field(..., description="유리수 'p/q'")
    degenerate: bool

    @classmethod
    def of(cls, result: EmbedResult) -> "EmbedOutput":
        return cls(value=rational_text(result.value), degenerate=result.degenerate)


class CheckOutput(JsonModel):
    name: str
    checked: int


class ValidationOutput(JsonModel):
    passed: bool
    probes: int
    checks: List[CheckOutput]

    @classmethod
    def of(cls, report: ValidationReport) -> "ValidationOutput":
        return cls(
            passed=report.passed,
            probes=report.probes,
            checks=[CheckOutput(name=c.name, checked=c.checked) for c in report.checks],
        )


class AlmostAddOutput(JsonModel):
    pairs: int
    standard_defects: int
    max_abs_defect: int
    almost_additive: bool

    @classmethod
    def of(cls, report: AlmostAddReport) -> "AlmostAddOutput":
        return cls(
            pairs=report.pairs,
            standard_defects=report.standard_defects,
            max_abs_defect=report.max_abs_defect,
            almost_additive=report.almost_additive,
        )


class AutoOutput(JsonModel):
    """apply --desc 로 다시 읽을 수 있는 기술자 문서 + 경로와 검증 결과"""

    dim: int
    route: Literal["e2", "e3"]
    descriptor: DescriptorSchema
    validation: ValidationOutput
    almost_add: Optional[AlmostAddOutput] = None


class ApplyOutput(JsonModel):
    x: ElementOutput
    image: ElementOutput


class ErrorOutput(JsonModel):
    error: str
    message: str
    details: Dict[str, str] = Field(default_factory=dict)
