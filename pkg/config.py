"""Configuration management for the independence logic workbench."""

from pathlib import Path

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from prover import Budget

OUTPUT_FORMATS = ("plain", "machine")


class Settings(BaseSettings):
    """Workbench settings, read from ``INDEP_*`` environment variables or ``.env``."""

    model_config = SettingsConfigDict(env_prefix="INDEP_", env_file=".env", case_sensitive=False, extra="ignore")

    # Prover budget
    prover_depth: int = 5
    prover_ms: int = 2000
    cm_size: int = 3

    # Bounded checks
    max_size: int = 3
    closure_bound: int = 5

    # Output
    output_format: str = "plain"
    log_level: str = "WARNING"

    # Bundled data and the self-test suite
    corpus_dir: Path = Path(__file__).resolve().parent / "corpus"
    selftest_samples: int = 500
    selftest_seed: int = 7
    selftest_formula_size: int = 5
    selftest_team_vars: int = 3

    @field_validator("corpus_dir", mode="before")
    @classmethod
    def coerce_path(cls, v: Path | str) -> Path:
        if isinstance(v, str):
            return Path(v)
        return v

    @field_validator("output_format")
    @classmethod
    def known_format(cls, v: str) -> str:
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}, got {v!r}")
        return v

    @field_validator("prover_ms", "max_size", "closure_bound", "selftest_samples", "selftest_formula_size")
    @classmethod
    def positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("prover_depth", "cm_size")
    @classmethod
    def non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"must not be negative, got {v}")
        return v

    @field_validator("selftest_team_vars")
    @classmethod
    def team_vars_in_range(cls, v: int) -> int:
        if not 1 <= v <= 3:
            raise ValueError(f"self-test teams range over one to three variables, got {v}")
        return v

    @field_validator("log_level")
    @classmethod
    def upper_level(cls, v: str) -> str:
        return v.upper()

    def prover_budget(self) -> Budget:
        return Budget(depth=self.prover_depth, ms=self.prover_ms, cm_size=self.cm_size)


settings = Settings()
