"""성질 검사 스위트 레지스트리

각 케이스 함수는 (recorder, sampler, config)를 받아 검사 결과를 recorder에
기록합니다. 케이스마다 "{seed}:{suite}:{index}" 시드의 샘플러를 새로 만들기
때문에 실행 순서나 동시성과 무관하게 결과가 같습니다.
"""

from typing import Callable, Dict, List

from src.cli.sampler import ElementSampler, SampleProfile
from src.cli.suites.algebra import algebra_case, roundtrip_case
from src.cli.suites.analysis import b11_case, embed_case, sequences_case
from src.cli.suites.automorph import automorph_case
from src.cli.suites.case import CaseOutcome, CaseRecorder
from src.cli.suites.equivalence import (
    agreement_case,
    closure_case,
    convexity_case,
    equivalence_laws_case,
    refinement_case,
    witness_sets_case,
)
from src.cli.suites.separation import separation_case
from src.series import ModelConfig

SuiteCase = Callable[[CaseRecorder, ElementSampler, ModelConfig], None]

SUITES: Dict[str, SuiteCase] = {
    "algebra": algebra_case,
    "refinement": refinement_case,
    "equivalence_laws": equivalence_laws_case,
    "convexity": convexity_case,
    "closure": closure_case,
    "agreement": agreement_case,
    "witness_sets": witness_sets_case,
    "separation": separation_case,
    "automorph": automorph_case,
    "sequences": sequences_case,
    "b11": b11_case,
    "embed": embed_case,
    "roundtrip": roundtrip_case,
}

ALL = "all"


def resolve(name: str) -> List[str]:
    if name == ALL:
        return list(SUITES)
    if name not in SUITES:
        raise KeyError(name)
    return [name]


def run_case(suite: str, index: int, seed: int, config: ModelConfig) -> CaseOutcome:
    profile = SampleProfile(dim=config.dim, seed=f"{seed}:{suite}:{index}")
    recorder = CaseRecorder(suite, index, config.dim)
    with recorder.guard(f"{suite}[{index}]"):
        SUITES[suite](recorder, ElementSampler(profile), config)
    return recorder.outcome()


__all__ = ["ALL", "SUITES", "CaseOutcome", "CaseRecorder", "SuiteCase", "resolve", "run_case"]
