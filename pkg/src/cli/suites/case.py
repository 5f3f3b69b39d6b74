from contextlib import contextmanager
from typing import Dict, Iterator, List

from pydantic import Field

from src.cli.schemas.element_schema import JsonModel
from src.core.exceptions import ModelArithmeticError, NonTerminatingQuotient, PartialityError


class CaseOutcome(JsonModel):
    suite: str
    index: int
    checked: int = 0
    violations: List[str] = Field(default_factory=list)
    partial: int = Field(0, description="부분성 오류로 건너뛴 검사 수")
    exhibits: List[Dict[str, str]] = Field(default_factory=list)


class CaseRecorder:
    """한 케이스의 검사 결과를 모읍니다"""

    def __init__(self, suite: str, index: int, dim: int):
        self.suite = suite
        self.index = index
        self.dim = dim
        self.checked = 0
        self.partial = 0
        self.violations: List[str] = []
        self.exhibits: List[Dict[str, str]] = []

    def expect(self, condition: bool, message: str) -> bool:
        self.checked += 1
        if not condition:
            self.violations.append(message)
        return condition

    def exhibit(self, **fields: str) -> None:
        self.exhibits.append({key: str(value) for key, value in fields.items()})

    @contextmanager
    def guard(self, label: str) -> Iterator[None]:
        """부분성 오류는 세고, 그 밖의 예외는 위반으로 기록"""
        try:
            yield
        except NonTerminatingQuotient as e:
            if self.dim == 1:
                self.violations.append(f"{label}: d=1 division must terminate ({e.message})")
            else:
                self.partial += 1
        except PartialityError:
            self.partial += 1
        except ModelArithmeticError as e:
            self.violations.append(f"{label}: {e.code}: {e.message}")
        except Exception as e:
            self.violations.append(f"{label}: unexpected {type(e).__name__}: {e}")

    def outcome(self) -> CaseOutcome:
        return CaseOutcome(
            suite=self.suite,
            index=self.index,
            checked=self.checked,
            violations=self.violations,
            partial=self.partial,
            exhibits=self.exhibits,
        )
