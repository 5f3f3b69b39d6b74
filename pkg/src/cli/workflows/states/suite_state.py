from datetime import datetime
from typing import Annotated, List, TypedDict, Union


def add_status_with_time(current: List[dict], new: Union[str, List[str]]) -> List[dict]:
    """메시지를 리스트에 추가할 때 타임스탬프를 붙이는 리듀서"""
    messages = new if isinstance(new, list) else [new]
    stamp = datetime.now().isoformat()
    return (current or []) + [{"msg": msg, "timestamp": stamp} for msg in messages]


class SuiteState(TypedDict):
    suite_names: List[str]
    samples: int
    seed: int
    dim: int
    div_budget: int
    validation_probes: int
    concurrency: int

    # 케이스 {"suite", "index"} 와 결과 (CaseOutcome dump, 인덱스 순)
    cases: List[dict]
    outcomes: List[dict]
    report: dict

    status_message: Annotated[List[dict], add_status_with_time]
    process_start_time: datetime
    process_time: float

    # 에러 처리
    is_error: bool
    error_message: str
