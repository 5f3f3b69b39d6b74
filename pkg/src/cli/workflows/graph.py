from datetime import datetime
from typing import List, Optional

from langgraph.graph import END, START, StateGraph

from src.cli.schemas.suite_schema import SuiteReport
from src.cli.workflows.edges.conditions import error_branch
from src.cli.workflows.nodes.suite_nodes import (
    prepare_cases_node,
    run_cases_node,
    summarize_node,
)
from src.cli.workflows.states.suite_state import SuiteState
from src.core.config import settings
from src.core.exceptions import InvariantViolation
from src.shared.logger import get_logger

logger = get_logger(__name__)


def __initial_state(
    names: List[str],
    samples: int,
    seed: int,
    dim: int,
    div_budget: int,
    validation_probes: int,
    concurrency: int,
) -> SuiteState:
    return SuiteState(
        suite_names=names,
        samples=samples,
        seed=seed,
        dim=dim,
        div_budget=div_budget,
        validation_probes=validation_probes,
        concurrency=concurrency,
        cases=[],
        outcomes=[],
        report={},
        status_message=[
            "스위트 실행 시작",
            f"스위트 : {', '.join(names)}",
            f"샘플 {samples}개, seed={seed}, d={dim}",
        ],
        process_start_time=datetime.now(),
        process_time=0.0,
        is_error=False,
        error_message="",
    )


def build_suite_graph():
    """prepare_cases -> run_cases -> summarize, 각 단계 에러는 END로"""
    workflow = StateGraph(SuiteState)

    workflow.add_node("prepare_cases", prepare_cases_node)
    workflow.add_node("run_cases", run_cases_node)
    workflow.add_node("summarize", summarize_node)

    workflow.add_edge(START, "prepare_cases")
    workflow.add_conditional_edges(
        "prepare_cases", error_branch, {"error": END, "next": "run_cases"}
    )
    workflow.add_conditional_edges(
        "run_cases", error_branch, {"error": END, "next": "summarize"}
    )
    workflow.add_edge("summarize", END)

    return workflow.compile()


async def run_suite(
    names: List[str],
    samples: int,
    seed: int,
    dim: int,
    div_budget: Optional[int] = None,
    concurrency: Optional[int] = None,
    validation_probes: Optional[int] = None,
) -> SuiteReport:
    """
    성질 검사 스위트 워크플로우 실행

    Args:
        names: 실행할 스위트 이름 (순서대로 보고)
        samples: 스위트마다의 케이스 수
        seed: 케이스 시드의 기준값
        validation_probes: 자기동형사상마다 섞는 임의 probe 수 (없으면 설정값)

    Returns:
        SuiteReport
    """
    initial_state = __initial_state(
        names,
        samples,
        seed,
        dim,
        div_budget or settings.DIV_BUDGET,
        settings.VALIDATION_PROBES if validation_probes is None else validation_probes,
        concurrency or settings.SUITE_CONCURRENCY,
    )

    graph = build_suite_graph()
    final_state = await graph.ainvoke(initial_state)

    for status in final_state["status_message"]:
        logger.debug(f"{status['timestamp']} {status['msg']}")
    if final_state["is_error"]:
        raise InvariantViolation(f"suite run failed: {final_state['error_message']}")
    return SuiteReport.model_validate(final_state["report"])
