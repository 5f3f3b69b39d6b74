from typing import Dict, List

from pydantic import Field

from src.cli.schemas.element_schema import JsonModel

# 요약에 남기는 위반 메시지 수
MAX_REPORTED_FAILURES = 10


class SuiteSummary(JsonModel):
    name: str
    cases: int
    checked: int
    violations: int
    partial: int = Field(..., description="부분성 오류로 건너뛴 검사 수")
    failures: List[str] = Field(default_factory=list, description="앞쪽 위반 메시지")
    exhibits: List[Dict[str, str]] = Field(default_factory=list)


class SuiteReport(JsonModel):
    seed: int
    dim: int
    samples: int
    passed: bool
    suites: List[SuiteSummary]
