"""모델 연산 예외 계층

모든 예외는 ModelArithmeticError를 상속하며, CLI가 그대로 사용하는
종료 코드(exit_code)와 JSON 출력용 code 문자열을 가집니다.

- 3: 모델의 부분성(partiality) 오류
- 2: 사용법/파싱/입력 조건 위반
- 1: 부정적 결과 (동치 아님, 증명 불가, 검증 실패)
"""

from typing import Any, Dict, Optional


class ModelArithmeticError(Exception):
    """모든 도메인 예외의 기본 클래스"""

    code: str = "model_error"
    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.code, "message": self.message}
        for key, value in self.details.items():
            payload[key] = value if isinstance(value, (int, str, bool)) else str(value)
        return payload


# --- 부분성 (exit 3) ---


class PartialityError(ModelArithmeticError):
    exit_code = 3


class NonTerminatingQuotient(PartialityError):
    """d=2에서 몫 전개가 div_budget을 넘는 경우"""

    code = "non_terminating_quotient"


class CoefficientNotRepresentable(PartialityError):
    """유리 계수로 표현할 수 없는 k제곱근"""

    code = "coefficient_not_representable"


# --- 사용법/입력 (exit 2) ---


class UsageError(ModelArithmeticError):
    exit_code = 2


class ParseError(UsageError):
    code = "parse_error"

    def __init__(self, message: str, position: int, expected: str):
        super().__init__(message, position=position, expected=expected)
        self.position = position
        self.expected = expected


class InvariantViolation(UsageError):
    """Element 불변식을 만족하지 않는 입력"""

    code = "invariant_violation"


class DimensionMismatch(UsageError):
    code = "dimension_mismatch"


class StandardInput(UsageError):
    """동치 관계는 M \\ N 위에서만 정의됨"""

    code = "standard_input"


# --- 부정적 결과 (exit 1) ---


class Underflow(ModelArithmeticError):
    code = "underflow"


class NotEquivalent(ModelArithmeticError):
    code = "not_equivalent"


class NotE2Equivalent(NotEquivalent):
    code = "not_e2_equivalent"


class NotE3Equivalent(NotEquivalent):
    code = "not_e3_equivalent"


class NotE4Equivalent(NotEquivalent):
    code = "not_e4_equivalent"


class CannotProve(ModelArithmeticError):
    """E5 증명 경로(E2/E3)가 없음. E5가 아니라는 뜻은 아님"""

    code = "cannot_prove"


class ValidationFailure(ModelArithmeticError):
    code = "validation_failure"

    def __init__(self, message: str, check: str, pair: Optional[tuple] = None):
        super().__init__(message, check=check)
        self.check = check
        self.pair = pair
