from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    MODEL_DIM: Literal[1, 2] = 1
    DIV_BUDGET: int = 64
    SEARCH_N_MAX: int = 64
    SEED: int = 7
    VALIDATION_PROBES: int = 1000
    SUITE_CONCURRENCY: int = 8
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")


settings = Settings()
