"""스위트 상태 리듀서 단위 테스트"""

from src.cli.workflows.states.suite_state import add_status_with_time


def test_add_status_with_time_stamps_each_message():
    # Given
    current = add_status_with_time([], "케이스 준비 완료: 3개")

    # When
    merged = add_status_with_time(current, ["요약 완료", "종료"])

    # Then
    assert [entry["msg"] for entry in merged] == ["케이스 준비 완료: 3개", "요약 완료", "종료"]
    assert all(set(entry) == {"msg", "timestamp"} for entry in merged)
    assert add_status_with_time(None, "시작")[0]["msg"] == "시작"
