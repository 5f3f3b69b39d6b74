from src.cli.workflows.states.suite_state import SuiteState


def error_branch(state: SuiteState) -> str:
    """노드 에러 분기"""
    if state.get("is_error"):
        return "error"
    return "next"
