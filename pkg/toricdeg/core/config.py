# toricdeg/core/config.py
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="TORICDEG_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # General
    app_env: str = "development"
    debug: bool = False
    log_level: str = "INFO"

    # Term orders
    default_tiebreak: Literal["lex", "degrevlex"] = "lex"

    # Reproducibility
    random_seed: int = 0

    # Search limits
    max_subset_n: int = 20  # subset enumeration in the Moebius formulas is 2^n
    max_fiber_points: int = 500  # fiber-graph Betti oracle only runs below this
    approx_candidate_limit: int = 20000
    membership_cache_size: int = 200_000

    # Acceptance runner sample sizes
    random_instances: int = 50
    lemma_samples: int = 200
    certificate_samples: int = 100

    @field_validator(
        "max_subset_n",
        "max_fiber_points",
        "approx_candidate_limit",
        "membership_cache_size",
        "random_instances",
        "lemma_samples",
        "certificate_samples",
    )
    @classmethod
    def _positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("limits must be positive")
        return v

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, v: str) -> str:
        return v.upper()


settings = Settings()
