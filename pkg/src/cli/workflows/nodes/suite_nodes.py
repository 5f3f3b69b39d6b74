import asyncio
from time import time
from typing import Dict, List

from src.cli.schemas.suite_schema import MAX_REPORTED_FAILURES, SuiteReport, SuiteSummary
from src.cli.suites import SUITES, CaseOutcome, run_case
from src.cli.workflows.states.suite_state import SuiteState
from src.series import ModelConfig
from src.shared.logger import get_logger

logger = get_logger(__name__)


def prepare_cases_node(state: SuiteState) -> Dict:
    """스위트 이름과 샘플 수로 케이스 목록을 만듭니다"""
    try:
        unknown = [name for name in state["suite_names"] if name not in SUITES]
        if unknown:
            raise KeyError(f"unknown suite: {', '.join(unknown)}")
        if state["samples"] < 1:
            raise ValueError(f"samples must be positive, got {state['samples']}")

        cases = [
            {"suite": name, "index": index}
            for name in state["suite_names"]
            for index in range(state["samples"])
        ]
        return {
            "cases": cases,
            "status_message": f"케이스 준비 완료: {len(cases)}개",
        }
    except Exception as e:
        logger.error(f"케이스 준비 실패: {e}")
        return {
            "is_error": True,
            "error_message": str(e),
            "status_message": "케이스 준비 실패",
        }


async def run_cases_node(state: SuiteState) -> Dict:
    """케이스를 동시에 실행하고 (스위트 순서, 인덱스) 순으로 정렬합니다"""
    try:
        start_time = time()
        config = ModelConfig.from_settings(
            dim=state["dim"],
            div_budget=state["div_budget"],
            seed=state["seed"],
            validation_probes=state["validation_probes"],
        )
        semaphore = asyncio.Semaphore(state["concurrency"])

        async def run_one(case: dict) -> CaseOutcome:
            async with semaphore:
                return await asyncio.to_thread(
                    run_case, case["suite"], case["index"], state["seed"], config
                )

        tasks = [run_one(case) for case in state["cases"]]
        all_results: List[CaseOutcome] = await asyncio.gather(*tasks)

        order = {name: position for position, name in enumerate(state["suite_names"])}
        all_results.sort(key=lambda outcome: (order[outcome.suite], outcome.index))

        elapsed = time() - start_time
        logger.info(f"케이스 {len(all_results)}개 실행, 소요 시간: {elapsed:.4f}초")
        return {
            "outcomes": [outcome.model_dump() for outcome in all_results],
            "status_message": f"케이스 실행 완료, 소요 시간: {elapsed:.4f}초",
        }
    except Exception as e:
        logger.error(f"케이스 실행 실패: {e}")
        return {
            "is_error": True,
            "error_message": str(e),
            "status_message": "케이스 실행 실패",
        }


def summarize_node(state: SuiteState) -> Dict:
    """스위트별로 검사 수, 위반, 부분성 오류를 모읍니다"""
    try:
        summaries: List[SuiteSummary] = []
        for name in state["suite_names"]:
            outcomes = [
                CaseOutcome.model_validate(item)
                for item in state["outcomes"]
                if item["suite"] == name
            ]
            failures = [
                f"[{outcome.index}] {message}"
                for outcome in outcomes
                for message in outcome.violations
            ]
            summaries.append(
                SuiteSummary(
                    name=name,
                    cases=len(outcomes),
                    checked=sum(outcome.checked for outcome in outcomes),
                    violations=len(failures),
                    partial=sum(outcome.partial for outcome in outcomes),
                    failures=failures[:MAX_REPORTED_FAILURES],
                    exhibits=[x for outcome in outcomes for x in outcome.exhibits],
                )
            )

        report = SuiteReport(
            seed=state["seed"],
            dim=state["dim"],
            samples=state["samples"],
            passed=all(summary.violations == 0 for summary in summaries),
            suites=summaries,
        )
        return {
            "report": report.model_dump(),
            "process_time": time() - state["process_start_time"].timestamp(),
            "status_message": "요약 완료" if report.passed else "위반 발견",
        }
    except Exception as e:
        logger.error(f"요약 실패: {e}")
        return {
            "is_error": True,
            "error_message": str(e),
            "status_message": "요약 실패",
        }
