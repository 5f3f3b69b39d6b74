from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

from src.core.config import settings


class ModelConfig(BaseModel):
    """모델 설정 (차원, 나눗셈 예산, 탐색 한계, 시드)"""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, frozen=True)

    dim: Literal[1, 2] = Field(1, description="지수 차원 d")
    div_budget: int = Field(64, ge=1, description="d=2 몫 전개 최대 항 수")
    search_n_max: int = Field(64, ge=1, description="표준 n 탐색 상한")
    seed: int = Field(7, description="64비트 시드")
    validation_probes: int = Field(1000, ge=0, description="자기동형사상 검증에 섞는 임의 probe 수")

    @classmethod
    def from_settings(cls, **overrides) -> "ModelConfig":
        values = {
            "dim": settings.MODEL_DIM,
            "div_budget": settings.DIV_BUDGET,
            "search_n_max": settings.SEARCH_N_MAX,
            "seed": settings.SEED,
            "validation_probes": settings.VALIDATION_PROBES,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
